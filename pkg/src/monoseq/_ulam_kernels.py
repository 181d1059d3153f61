"""Compiled inner loops for the Ulam generators.

Each kernel extends a prefix of Ulam terms in place and returns the new
count.  The algorithms are deliberately distinct in their step structure
(that is the whole point: the benchmark module measures their separations),
so the kernels must not share shortcuts:

* ``extend_oeis``      -- per candidate, linear membership scans; cubic total.
* ``extend_filter``    -- two-cursor scan over (ascending, descending) views,
  with two independent toggles: rebuild the descending copy from scratch per
  candidate, and abort the candidate at the second representation.
* ``extend_generative``-- candidate queue of (value, multiplicity<=2) entries
  merged with the sums of each new term and its predecessors.

Values are int64; a kernel returns a negative count when the next candidate
would leave the checked value range (the wrapper raises OverflowError) and
``extend_generative`` returns ``NEED_SPACE`` when its queue buffer is full.
"""

import numpy as np
from numba import njit

# Candidates are sums of two terms, so cap terms at 2**62 to keep every
# intermediate inside int64.
VALUE_CAP = 1 << 62

NEED_SPACE = -1
OVERFLOW = -2


@njit(cache=True)
def extend_oeis(terms, count, target):
    while count < target:
        last = terms[count - 1]
        if last >= VALUE_CAP:
            return OVERFLOW
        z = last + 1
        while True:
            reps = 0
            for i in range(count):
                ui = terms[i]
                if ui + ui >= z:
                    break  # remaining pairs would need a partner <= ui
                d = z - ui
                for j in range(count):  # linear membership scan of the prefix
                    if terms[j] == d:
                        reps += 1
                        break
                    if terms[j] > d:
                        break
                if reps == 2:
                    break  # abandon the candidate at the second representation
            if reps == 1:
                break
            z += 1
        terms[count] = z
        count += 1
    return count


@njit(cache=True)
def extend_filter(terms, count, target, rebuild, stop_at_two, scratch):
    while count < target:
        last = terms[count - 1]
        if last >= VALUE_CAP:
            return OVERFLOW
        z = last + 1
        while True:
            if rebuild:
                # reverse the whole prefix from scratch, per candidate
                for m in range(count):
                    scratch[m] = terms[count - 1 - m]
            h = 0
            i = 0
            j = 0
            while True:
                hu = terms[i]
                if rebuild:
                    hr = scratch[j]
                else:
                    hr = terms[count - 1 - j]  # incremental descending view
                if hr <= hu:
                    break
                s = hu + hr
                if s == z:
                    h += 1
                    if stop_at_two and h == 2:
                        break
                    i += 1
                    j += 1
                elif s < z:
                    i += 1
                else:
                    j += 1
            if h == 1:
                break
            z += 1
        terms[count] = z
        count += 1
    return count


@njit(cache=True)
def extend_generative(terms, count, qv_a, qocc_a, qv_b, qocc_b, qstate, target, status):
    """qstate holds (start, end, active-buffer flag); each term's merge is a
    single forward pass from the active buffer into the spare, then the
    buffers swap.  status[0] on return: 0 done, NEED_SPACE (grow the
    buffers, resume from the returned count), or OVERFLOW."""
    status[0] = 0
    qs = qstate[0]
    qe = qstate[1]
    if qstate[2] == 0:
        cur_v, cur_o, alt_v, alt_o = qv_a, qocc_a, qv_b, qocc_b
    else:
        cur_v, cur_o, alt_v, alt_o = qv_b, qocc_b, qv_a, qocc_a
    while count < target:
        # drop the prefix of already-duplicated candidates
        while qs < qe and cur_o[qs] == 2:
            qs += 1
        if qs >= qe:
            status[0] = OVERFLOW  # cannot happen: the queue never empties
            break
        u = cur_v[qs]
        if u >= VALUE_CAP:
            status[0] = OVERFLOW
            break
        n_s = count  # sums u + terms[k] for the strictly smaller predecessors
        if (qe - qs - 1) + n_s > alt_v.shape[0]:
            status[0] = NEED_SPACE
            break
        qs += 1
        terms[count] = u
        count += 1
        # one-pass merge of the ascending, duplicate-free sums into the queue
        o = 0
        i = qs
        k = 0
        while i < qe and k < n_s:
            sv = u + terms[k]
            if cur_v[i] < sv:
                alt_v[o] = cur_v[i]
                alt_o[o] = cur_o[i]
                i += 1
            elif cur_v[i] > sv:
                alt_v[o] = sv
                alt_o[o] = 1
                k += 1
            else:
                alt_v[o] = sv
                alt_o[o] = 2  # multiplicity saturates at 2
                i += 1
                k += 1
            o += 1
        while i < qe:
            alt_v[o] = cur_v[i]
            alt_o[o] = cur_o[i]
            i += 1
            o += 1
        while k < n_s:
            alt_v[o] = u + terms[k]
            alt_o[o] = 1
            k += 1
            o += 1
        qs = 0
        qe = o
        cur_v, alt_v = alt_v, cur_v
        cur_o, alt_o = alt_o, cur_o
        qstate[2] = 1 - qstate[2]
    qstate[0] = qs
    qstate[1] = qe
    return count
