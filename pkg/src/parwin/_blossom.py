"""Exact weighted matching on dense complete graphs, JIT-compiled.

Flat-array port of the primal-dual blossom algorithm in the form used by
``networkx.algorithms.matching.max_weight_matching`` (Galil's "Efficient
algorithms for finding maximum matching in graphs", via Van Rantwijk's
implementation), restricted to what the decoders here need: dense complete
graphs, integer weights, max-cardinality mode.  The public entry point is
:func:`min_weight_perfect_matching`.

Vertices are ``0..n-1``; blossom slots are ``n..2n-1`` and are recycled
through a free list.  All duals are premultiplied by two so every quantity
stays integral.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NONE = -1

# Workspace layout: one big int64 scratch bundle would be opaque; instead the
# solver allocates its own arrays per call.  Sizes are O(n^2) int32, which is
# small for the defect counts seen in practice (n < ~300).


@njit(cache=True)
def _slack(W, dualvar, v, w):
    return dualvar[v] + dualvar[w] - 2 * W[v, w]


@njit(cache=True)
def _blossom_leaves(b, n, childs, childs_len, out, stack):
    """Collect leaf vertices of (sub-)blossom b into out; return count."""
    if b < n:
        out[0] = b
        return 1
    cnt = 0
    sp = 0
    stack[sp] = b
    sp += 1
    while sp > 0:
        sp -= 1
        t = stack[sp]
        if t < n:
            out[cnt] = t
            cnt += 1
        else:
            bi = t - n
            for i in range(childs_len[bi]):
                stack[sp] = childs[bi, i]
                sp += 1
    return cnt


@njit(cache=True)
def _assign_label(
    w,
    t,
    v,
    n,
    mate,
    label,
    labeledge_v,
    labeledge_w,
    inblossom,
    blossombase,
    bestedge_v,
    bestedge_w,
    childs,
    childs_len,
    queue,
    qptr,
    leaves,
    stack,
):
    while True:
        b = inblossom[w]
        label[w] = t
        label[b] = t
        if v != NONE:
            labeledge_v[w] = v
            labeledge_w[w] = w
            labeledge_v[b] = v
            labeledge_w[b] = w
        else:
            labeledge_v[w] = NONE
            labeledge_w[w] = NONE
            labeledge_v[b] = NONE
            labeledge_w[b] = NONE
        bestedge_v[w] = NONE
        bestedge_w[w] = NONE
        bestedge_v[b] = NONE
        bestedge_w[b] = NONE
        if t == 1:
            cnt = _blossom_leaves(b, n, childs, childs_len, leaves, stack)
            for i in range(cnt):
                queue[qptr[0]] = leaves[i]
                qptr[0] += 1
            return
        # t == 2: the base's mate becomes an S-vertex; loop instead of recurse.
        base = blossombase[b]
        w = mate[base]
        v = base
        t = 1


@njit(cache=True)
def _scan_blossom(v, w, label, labeledge_v, inblossom, blossombase, mate, path):
    """Trace back from v and w; return new-blossom base or NONE (augmenting)."""
    plen = 0
    base = NONE
    while v != NONE:
        b = inblossom[v]
        if label[b] & 4:
            base = blossombase[b]
            break
        path[plen] = b
        plen += 1
        label[b] = 5
        if labeledge_v[b] == NONE:
            v = NONE
        else:
            v = labeledge_v[b]
            b = inblossom[v]
            v = labeledge_v[b]
        if w != NONE:
            tmp = v
            v = w
            w = tmp
    for i in range(plen):
        label[path[i]] = 1
    return base


@njit(cache=True)
def _add_blossom(
    base,
    v,
    w,
    n,
    W,
    mate,
    label,
    labeledge_v,
    labeledge_w,
    inblossom,
    blossomparent,
    blossombase,
    bestedge_v,
    bestedge_w,
    dualvar,
    blossomdual,
    childs,
    childs_len,
    bedges_v,
    bedges_w,
    mybest_v,
    mybest_w,
    mybest_len,
    used,
    free_slots,
    fsp,
    queue,
    qptr,
    leaves,
    stack,
    tmp_childs,
    tmp_ev,
    tmp_ew,
    besteto_v,
    besteto_w,
    besteto_stamp,
    stamp,
):
    bb = inblossom[base]
    bv = inblossom[v]
    bw = inblossom[w]
    # Claim a blossom slot.
    fsp[0] -= 1
    b = free_slots[fsp[0]]
    bi = b - n
    used[bi] = 1
    blossombase[b] = base
    blossomparent[b] = NONE
    blossomparent[bb] = b
    # Trace from v back to base, collecting sub-blossoms and connecting edges.
    tlen = 0
    tmp_ev[0] = v
    tmp_ew[0] = w
    elen = 1
    vv = v
    while bv != bb:
        blossomparent[bv] = b
        tmp_childs[tlen] = bv
        tlen += 1
        tmp_ev[elen] = labeledge_v[bv]
        tmp_ew[elen] = labeledge_w[bv]
        elen += 1
        vv = labeledge_v[bv]
        bv = inblossom[vv]
    # childs = [bb] + reversed(tmp_childs); edges = reversed(tmp edges).
    childs[bi, 0] = bb
    for i in range(tlen):
        childs[bi, 1 + i] = tmp_childs[tlen - 1 - i]
    clen = tlen + 1
    for i in range(elen // 2):
        t1 = tmp_ev[i]
        tmp_ev[i] = tmp_ev[elen - 1 - i]
        tmp_ev[elen - 1 - i] = t1
        t2 = tmp_ew[i]
        tmp_ew[i] = tmp_ew[elen - 1 - i]
        tmp_ew[elen - 1 - i] = t2
    for i in range(elen):
        bedges_v[bi, i] = tmp_ev[i]
        bedges_w[bi, i] = tmp_ew[i]
    # Trace from w back to base, appending reversed label edges.
    ww = w
    while bw != bb:
        blossomparent[bw] = b
        childs[bi, clen] = bw
        clen += 1
        bedges_v[bi, elen] = labeledge_w[bw]
        bedges_w[bi, elen] = labeledge_v[bw]
        elen += 1
        ww = labeledge_v[bw]
        bw = inblossom[ww]
    childs_len[bi] = clen
    label[b] = 1
    labeledge_v[b] = labeledge_v[bb]
    labeledge_w[b] = labeledge_w[bb]
    blossomdual[b] = 0
    # Relabel leaves; former T-vertices join the queue as S-vertices.
    cnt = _blossom_leaves(b, n, childs, childs_len, leaves, stack)
    for i in range(cnt):
        lv = leaves[i]
        if label[inblossom[lv]] == 2:
            queue[qptr[0]] = lv
            qptr[0] += 1
        inblossom[lv] = b
    # Compute least-slack edges to every neighbouring S-blossom.
    stamp[0] += 1
    st = stamp[0]
    for ci in range(clen):
        cbv = childs[bi, ci]
        if cbv >= n and mybest_len[cbv - n] != NONE:
            # Walk the sub-blossom's cached least-slack edge list.
            cbi = cbv - n
            m = mybest_len[cbi]
            for k in range(m):
                i0 = mybest_v[cbi, k]
                j0 = mybest_w[cbi, k]
                if inblossom[j0] == b:
                    t0 = i0
                    i0 = j0
                    j0 = t0
                bj = inblossom[j0]
                if (
                    bj != b
                    and label[bj] == 1
                    and (
                        besteto_stamp[bj] != st
                        or _slack(W, dualvar, i0, j0)
                        < _slack(W, dualvar, besteto_v[bj], besteto_w[bj])
                    )
                ):
                    besteto_v[bj] = i0
                    besteto_w[bj] = j0
                    besteto_stamp[bj] = st
            mybest_len[cbi] = NONE
        else:
            cnt2 = _blossom_leaves(cbv, n, childs, childs_len, leaves, stack)
            for li in range(cnt2):
                i0 = leaves[li]
                for j0 in range(n):
                    if j0 == i0:
                        continue
                    jj = j0
                    ii = i0
                    if inblossom[jj] == b:
                        t0 = ii
                        ii = jj
                        jj = t0
                    bj = inblossom[jj]
                    if (
                        bj != b
                        and label[bj] == 1
                        and (
                            besteto_stamp[bj] != st
                            or _slack(W, dualvar, ii, jj)
                            < _slack(W, dualvar, besteto_v[bj], besteto_w[bj])
                        )
                    ):
                        besteto_v[bj] = ii
                        besteto_w[bj] = jj
                        besteto_stamp[bj] = st
        bestedge_v[cbv] = NONE
        bestedge_w[cbv] = NONE
    # Store b's least-slack list and pick its overall best edge.
    m = 0
    for bj in range(2 * n):
        if besteto_stamp[bj] == st:
            mybest_v[bi, m] = besteto_v[bj]
            mybest_w[bi, m] = besteto_w[bj]
            m += 1
    mybest_len[bi] = m
    bestedge_v[b] = NONE
    bestedge_w[b] = NONE
    bestslack = 0
    for k in range(m):
        ks = _slack(W, dualvar, mybest_v[bi, k], mybest_w[bi, k])
        if bestedge_v[b] == NONE or ks < bestslack:
            bestedge_v[b] = mybest_v[bi, k]
            bestedge_w[b] = mybest_w[bi, k]
            bestslack = ks


@njit(cache=True)
def _wrap(j, clen):
    m = j % clen
    if m < 0:
        m += clen
    return m


@njit(cache=True)
def _augment_blossom(
    b, v, n, mate, blossomparent, blossombase, childs, childs_len, bedges_v, bedges_w
):
    """Swap matched edges around blossom b so that vertex v becomes its base."""
    bi = b - n
    t = v
    while blossomparent[t] != b:
        t = blossomparent[t]
    if t >= n:
        _augment_blossom(
            t, v, n, mate, blossomparent, blossombase, childs, childs_len, bedges_v, bedges_w
        )
    clen = childs_len[bi]
    i = 0
    for k in range(clen):
        if childs[bi, k] == t:
            i = k
            break
    j = i
    if i & 1:
        j -= clen
        jstep = 1
    else:
        jstep = -1
    while j != 0:
        j += jstep
        t = childs[bi, _wrap(j, clen)]
        if jstep == 1:
            w = bedges_v[bi, _wrap(j, clen)]
            x = bedges_w[bi, _wrap(j, clen)]
        else:
            x = bedges_v[bi, _wrap(j - 1, clen)]
            w = bedges_w[bi, _wrap(j - 1, clen)]
        if t >= n:
            _augment_blossom(
                t, w, n, mate, blossomparent, blossombase, childs, childs_len, bedges_v, bedges_w
            )
        j += jstep
        t = childs[bi, _wrap(j, clen)]
        if t >= n:
            _augment_blossom(
                t, x, n, mate, blossomparent, blossombase, childs, childs_len, bedges_v, bedges_w
            )
        mate[w] = x
        mate[x] = w
    # Rotate child/edge lists so the new base leads.
    if i > 0:
        rc = np.empty(clen, dtype=np.int32)
        rev = np.empty(clen, dtype=np.int32)
        rew = np.empty(clen, dtype=np.int32)
        for k in range(clen):
            rc[k] = childs[bi, _wrap(i + k, clen)]
            rev[k] = bedges_v[bi, _wrap(i + k, clen)]
            rew[k] = bedges_w[bi, _wrap(i + k, clen)]
        for k in range(clen):
            childs[bi, k] = rc[k]
            bedges_v[bi, k] = rev[k]
            bedges_w[bi, k] = rew[k]
    blossombase[b] = blossombase[childs[bi, 0]]


@njit(cache=True)
def _augment_matching(
    v,
    w,
    n,
    mate,
    label,
    labeledge_v,
    labeledge_w,
    inblossom,
    blossomparent,
    blossombase,
    childs,
    childs_len,
    bedges_v,
    bedges_w,
):
    for k in range(2):
        if k == 0:
            s = v
            j = w
        else:
            s = w
            j = v
        while True:
            bs = inblossom[s]
            if bs >= n:
                _augment_blossom(
                    bs, s, n, mate, blossomparent, blossombase, childs, childs_len, bedges_v, bedges_w
                )
            mate[s] = j
            if labeledge_v[bs] == NONE:
                break
            t = labeledge_v[bs]
            bt = inblossom[t]
            s = labeledge_v[bt]
            j = labeledge_w[bt]
            if bt >= n:
                _augment_blossom(
                    bt, j, n, mate, blossomparent, blossombase, childs, childs_len, bedges_v, bedges_w
                )
            mate[j] = s


@njit(cache=True)
def _expand_blossom(
    b0,
    endstage,
    n,
    mate,
    label,
    labeledge_v,
    labeledge_w,
    inblossom,
    blossomparent,
    blossombase,
    bestedge_v,
    bestedge_w,
    blossomdual,
    allowedge,
    childs,
    childs_len,
    bedges_v,
    bedges_w,
    mybest_len,
    used,
    free_slots,
    fsp,
    queue,
    qptr,
    leaves,
    stack,
    work,
):
    wlen = 0
    work[wlen] = b0
    wlen += 1
    while wlen > 0:
        wlen -= 1
        b = work[wlen]
        bi = b - n
        clen = childs_len[bi]
        for ci in range(clen):
            s = childs[bi, ci]
            blossomparent[s] = NONE
            if s < n:
                inblossom[s] = s
            elif endstage and blossomdual[s] == 0:
                work[wlen] = s
                wlen += 1
            else:
                cnt = _blossom_leaves(s, n, childs, childs_len, leaves, stack)
                for li in range(cnt):
                    inblossom[leaves[li]] = s
        if (not endstage) and label[b] == 2:
            # Relabel the ring: walk from the entry child around to the base.
            entrychild = inblossom[labeledge_w[b]]
            j = 0
            for k in range(clen):
                if childs[bi, k] == entrychild:
                    j = k
                    break
            if j & 1:
                j -= clen
                jstep = 1
            else:
                jstep = -1
            v = labeledge_v[b]
            w = labeledge_w[b]
            while j != 0:
                if jstep == 1:
                    p = bedges_v[bi, _wrap(j, clen)]
                    q = bedges_w[bi, _wrap(j, clen)]
                else:
                    q = bedges_v[bi, _wrap(j - 1, clen)]
                    p = bedges_w[bi, _wrap(j - 1, clen)]
                label[w] = 0
                label[q] = 0
                _assign_label(
                    w, 2, v, n, mate, label, labeledge_v, labeledge_w, inblossom,
                    blossombase, bestedge_v, bestedge_w, childs, childs_len,
                    queue, qptr, leaves, stack,
                )
                allowedge[p, q] = 1
                allowedge[q, p] = 1
                j += jstep
                if jstep == 1:
                    v = bedges_v[bi, _wrap(j, clen)]
                    w = bedges_w[bi, _wrap(j, clen)]
                else:
                    w = bedges_v[bi, _wrap(j - 1, clen)]
                    v = bedges_w[bi, _wrap(j - 1, clen)]
                allowedge[v, w] = 1
                allowedge[w, v] = 1
                j += jstep
            bw = childs[bi, _wrap(j, clen)]
            label[w] = 2
            label[bw] = 2
            labeledge_v[w] = v
            labeledge_w[w] = w
            labeledge_v[bw] = v
            labeledge_w[bw] = w
            bestedge_v[bw] = NONE
            bestedge_w[bw] = NONE
            j += jstep
            while childs[bi, _wrap(j, clen)] != entrychild:
                bv = childs[bi, _wrap(j, clen)]
                if label[bv] == 1:
                    j += jstep
                    continue
                vv = NONE
                if bv < n:
                    vv = bv
                else:
                    cnt = _blossom_leaves(bv, n, childs, childs_len, leaves, stack)
                    for li in range(cnt):
                        if label[leaves[li]] != 0:
                            vv = leaves[li]
                            break
                if vv != NONE and label[vv] != 0:
                    label[vv] = 0
                    label[mate[blossombase[bv]]] = 0
                    _assign_label(
                        vv, 2, labeledge_v[vv], n, mate, label, labeledge_v,
                        labeledge_w, inblossom, blossombase, bestedge_v, bestedge_w,
                        childs, childs_len, queue, qptr, leaves, stack,
                    )
                j += jstep
        # Retire the blossom slot.
        label[b] = 0
        labeledge_v[b] = NONE
        labeledge_w[b] = NONE
        bestedge_v[b] = NONE
        bestedge_w[b] = NONE
        blossomparent[b] = NONE
        blossombase[b] = NONE
        blossomdual[b] = 0
        mybest_len[bi] = NONE
        childs_len[bi] = 0
        used[bi] = 0
        free_slots[fsp[0]] = b
        fsp[0] += 1


@njit(cache=True)
def _max_weight_matching_dense(W):
    """Max-cardinality maximum-weight matching on the dense complete graph W.

    Returns mate, with mate[v] == NONE only when n is odd and v is the one
    vertex left unmatched (complete graphs always admit near-perfect
    matchings in max-cardinality mode).
    """
    n = W.shape[0]
    mate = np.full(n, NONE, dtype=np.int32)
    if n < 2:
        return mate
    n2 = 2 * n
    maxweight = W[0, 1]
    for i in range(n):
        for j in range(n):
            if i != j and W[i, j] > maxweight:
                maxweight = W[i, j]

    label = np.zeros(n2, dtype=np.int32)
    labeledge_v = np.full(n2, NONE, dtype=np.int32)
    labeledge_w = np.full(n2, NONE, dtype=np.int32)
    inblossom = np.arange(n).astype(np.int32)
    blossomparent = np.full(n2, NONE, dtype=np.int32)
    blossombase = np.full(n2, NONE, dtype=np.int32)
    for v in range(n):
        blossombase[v] = v
    bestedge_v = np.full(n2, NONE, dtype=np.int32)
    bestedge_w = np.full(n2, NONE, dtype=np.int32)
    dualvar = np.full(n, maxweight, dtype=np.int64)
    blossomdual = np.zeros(n2, dtype=np.int64)
    allowedge = np.zeros((n, n), dtype=np.uint8)
    queue = np.empty(4 * n * n, dtype=np.int32)
    qptr = np.zeros(1, dtype=np.int64)

    childs = np.zeros((n, n + 2), dtype=np.int32)
    childs_len = np.zeros(n, dtype=np.int32)
    bedges_v = np.zeros((n, n + 2), dtype=np.int32)
    bedges_w = np.zeros((n, n + 2), dtype=np.int32)
    mybest_v = np.zeros((n, n2), dtype=np.int32)
    mybest_w = np.zeros((n, n2), dtype=np.int32)
    mybest_len = np.full(n, NONE, dtype=np.int32)
    used = np.zeros(n, dtype=np.uint8)
    free_slots = np.empty(n, dtype=np.int32)
    for i in range(n):
        free_slots[i] = n2 - 1 - i
    fsp = np.zeros(1, dtype=np.int64)
    fsp[0] = n

    leaves = np.empty(n, dtype=np.int32)
    stack = np.empty(n2, dtype=np.int32)
    path = np.empty(n2, dtype=np.int32)
    work = np.empty(n2, dtype=np.int32)
    tmp_childs = np.empty(n + 2, dtype=np.int32)
    tmp_ev = np.empty(n + 2, dtype=np.int32)
    tmp_ew = np.empty(n + 2, dtype=np.int32)
    besteto_v = np.zeros(n2, dtype=np.int32)
    besteto_w = np.zeros(n2, dtype=np.int32)
    besteto_stamp = np.zeros(n2, dtype=np.int64)
    stamp = np.zeros(1, dtype=np.int64)

    while True:  # stages
        label[:] = 0
        labeledge_v[:] = NONE
        labeledge_w[:] = NONE
        bestedge_v[:] = NONE
        bestedge_w[:] = NONE
        for bi in range(n):
            mybest_len[bi] = NONE
        allowedge[:, :] = 0
        qptr[0] = 0

        for v in range(n):
            if mate[v] == NONE and label[inblossom[v]] == 0:
                _assign_label(
                    v, 1, NONE, n, mate, label, labeledge_v, labeledge_w, inblossom,
                    blossombase, bestedge_v, bestedge_w, childs, childs_len,
                    queue, qptr, leaves, stack,
                )

        augmented = False
        while True:  # substages
            while qptr[0] > 0 and not augmented:
                qptr[0] -= 1
                v = queue[qptr[0]]
                for w in range(n):
                    if w == v:
                        continue
                    bv = inblossom[v]
                    bw = inblossom[w]
                    if bv == bw:
                        continue
                    kslack = 0
                    if not allowedge[v, w]:
                        kslack = _slack(W, dualvar, v, w)
                        if kslack <= 0:
                            allowedge[v, w] = 1
                            allowedge[w, v] = 1
                    if allowedge[v, w]:
                        if label[bw] == 0:
                            _assign_label(
                                w, 2, v, n, mate, label, labeledge_v, labeledge_w,
                                inblossom, blossombase, bestedge_v, bestedge_w,
                                childs, childs_len, queue, qptr, leaves, stack,
                            )
                        elif label[bw] == 1:
                            base = _scan_blossom(
                                v, w, label, labeledge_v, inblossom, blossombase, mate, path
                            )
                            if base != NONE:
                                _add_blossom(
                                    base, v, w, n, W, mate, label, labeledge_v,
                                    labeledge_w, inblossom, blossomparent, blossombase,
                                    bestedge_v, bestedge_w, dualvar, blossomdual,
                                    childs, childs_len, bedges_v, bedges_w,
                                    mybest_v, mybest_w, mybest_len, used,
                                    free_slots, fsp, queue, qptr, leaves, stack,
                                    tmp_childs, tmp_ev, tmp_ew,
                                    besteto_v, besteto_w, besteto_stamp, stamp,
                                )
                            else:
                                _augment_matching(
                                    v, w, n, mate, label, labeledge_v, labeledge_w,
                                    inblossom, blossomparent, blossombase,
                                    childs, childs_len, bedges_v, bedges_w,
                                )
                                augmented = True
                                break
                        elif label[w] == 0:
                            label[w] = 2
                            labeledge_v[w] = v
                            labeledge_w[w] = w
                    elif label[bw] == 1:
                        if bestedge_v[bv] == NONE or kslack < _slack(
                            W, dualvar, bestedge_v[bv], bestedge_w[bv]
                        ):
                            bestedge_v[bv] = v
                            bestedge_w[bv] = w
                    elif label[w] == 0:
                        if bestedge_v[w] == NONE or kslack < _slack(
                            W, dualvar, bestedge_v[w], bestedge_w[w]
                        ):
                            bestedge_v[w] = v
                            bestedge_w[w] = w
            if augmented:
                break

            # Dual adjustment (max-cardinality mode: delta1 only as fallback).
            deltatype = -1
            delta = np.int64(0)
            deltaedge_v = NONE
            deltaedge_w = NONE
            deltablossom = NONE

            for v in range(n):
                if label[inblossom[v]] == 0 and bestedge_v[v] != NONE:
                    d = _slack(W, dualvar, bestedge_v[v], bestedge_w[v])
                    if deltatype == -1 or d < delta:
                        delta = d
                        deltatype = 2
                        deltaedge_v = bestedge_v[v]
                        deltaedge_w = bestedge_w[v]

            for b in range(n2):
                if b >= n and not used[b - n]:
                    continue
                if blossomparent[b] == NONE and label[b] == 1 and bestedge_v[b] != NONE:
                    kslack = _slack(W, dualvar, bestedge_v[b], bestedge_w[b])
                    d = kslack // 2
                    if deltatype == -1 or d < delta:
                        delta = d
                        deltatype = 3
                        deltaedge_v = bestedge_v[b]
                        deltaedge_w = bestedge_w[b]

            for bi in range(n):
                b = n + bi
                if (
                    used[bi]
                    and blossomparent[b] == NONE
                    and label[b] == 2
                    and (deltatype == -1 or blossomdual[b] < delta)
                ):
                    delta = blossomdual[b]
                    deltatype = 4
                    deltablossom = b

            if deltatype == -1:
                deltatype = 1
                mn = dualvar[0]
                for v in range(1, n):
                    if dualvar[v] < mn:
                        mn = dualvar[v]
                delta = mn if mn > 0 else np.int64(0)

            for v in range(n):
                lb = label[inblossom[v]]
                if lb == 1:
                    dualvar[v] -= delta
                elif lb == 2:
                    dualvar[v] += delta
            for bi in range(n):
                b = n + bi
                if used[bi] and blossomparent[b] == NONE:
                    if label[b] == 1:
                        blossomdual[b] += delta
                    elif label[b] == 2:
                        blossomdual[b] -= delta

            if deltatype == 1:
                break
            elif deltatype == 2:
                allowedge[deltaedge_v, deltaedge_w] = 1
                allowedge[deltaedge_w, deltaedge_v] = 1
                queue[qptr[0]] = deltaedge_v
                qptr[0] += 1
            elif deltatype == 3:
                allowedge[deltaedge_v, deltaedge_w] = 1
                allowedge[deltaedge_w, deltaedge_v] = 1
                queue[qptr[0]] = deltaedge_v
                qptr[0] += 1
            elif deltatype == 4:
                _expand_blossom(
                    deltablossom, False, n, mate, label, labeledge_v, labeledge_w,
                    inblossom, blossomparent, blossombase, bestedge_v, bestedge_w,
                    blossomdual, allowedge, childs, childs_len, bedges_v, bedges_w,
                    mybest_len, used, free_slots, fsp, queue, qptr, leaves, stack, work,
                )

        if not augmented:
            break

        # End of stage: expand S-blossoms whose dual dropped to zero.
        for bi in range(n):
            b = n + bi
            if (
                used[bi]
                and blossomparent[b] == NONE
                and label[b] == 1
                and blossomdual[b] == 0
            ):
                _expand_blossom(
                    b, True, n, mate, label, labeledge_v, labeledge_w,
                    inblossom, blossomparent, blossombase, bestedge_v, bestedge_w,
                    blossomdual, allowedge, childs, childs_len, bedges_v, bedges_w,
                    mybest_len, used, free_slots, fsp, queue, qptr, leaves, stack, work,
                )

    return mate


@njit(cache=True)
def min_weight_perfect_matching(D):
    """Minimum-weight perfect matching on a dense complete graph.

    D is a symmetric int64 cost matrix with an even number of rows.  Returns
    mate with mate[i] = matched partner.  Costs must be non-negative.
    """
    m = D.shape[0]
    mate = np.full(m, NONE, dtype=np.int32)
    if m == 0:
        return mate
    if m == 2:
        mate[0] = 1
        mate[1] = 0
        return mate
    top = D[0, 1]
    for i in range(m):
        for j in range(m):
            if i != j and D[i, j] > top:
                top = D[i, j]
    Wmax = np.empty((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            Wmax[i, j] = top + 1 - D[i, j]
        Wmax[i, i] = 0
    return _max_weight_matching_dense(Wmax)
