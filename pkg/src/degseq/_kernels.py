"""Compiled kernels behind the graphicality pipeline, candidate admission,
and the metrics sweeps.

Every kernel takes an explicit ``workers`` chunk count and partitions work
exactly as the public contracts state (contiguous chunks of ceil(n/P), or
round-robin strides).  All merges are deterministic, so a kernel's output is
a function of its inputs and ``workers`` only, never of thread scheduling.
On multicore hosts the chunks execute on real threads; the logical result is
identical either way.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

I64 = np.int64


# ---------------------------------------------------------------------------
# graphicality pipeline steps
# ---------------------------------------------------------------------------


@njit(cache=True)
def seq_durfee(d):
    """Largest prefix length c with d[j-1] >= j-1 for all j <= c (sorted input)."""
    n = d.shape[0]
    c = 0
    i = 1
    while i <= n and d[i - 1] >= i - 1:
        c = i
        i += 1
    return c


@njit(parallel=True, cache=True)
def par_durfee(d, workers):
    """Round-robin corrected-Durfee scan: local maxima, then a max-reduction."""
    n = d.shape[0]
    local = np.zeros(workers, dtype=I64)
    for k in prange(workers):
        i = k + 1
        ck = 0
        while i <= n and d[i - 1] >= i - 1:
            ck = i
            i += workers
        local[k] = ck
    c = 0
    for k in range(workers):
        if local[k] > c:
            c = local[k]
    return c


@njit(cache=True)
def seq_prefix(d):
    """H[0] = 0, H[i] = d[0] + ... + d[i-1]."""
    n = d.shape[0]
    H = np.zeros(n + 1, dtype=I64)
    q = 0
    for i in range(n):
        q += d[i]
        H[i + 1] = q
    return H


@njit(parallel=True, cache=True)
def par_prefix(d, workers):
    """Chunked scan: per-chunk sums, exclusive scan of the sums, chunk sweeps."""
    n = d.shape[0]
    H = np.zeros(n + 1, dtype=I64)
    chunk = (n + workers - 1) // workers
    s = np.zeros(workers + 1, dtype=I64)
    for k in prange(workers):
        x = k * chunk
        y = min(x + chunk, n)
        t = 0
        for i in range(x, y):
            t += d[i]
        s[k + 1] = t
    for k in range(1, workers + 1):
        s[k] += s[k - 1]
    for k in prange(workers):
        x = k * chunk
        y = min(x + chunk, n)
        q = s[k]
        for i in range(x, y):
            q += d[i]
            H[i + 1] = q
    return H


@njit(cache=True)
def seq_weights(d):
    """w[j] for j in 1..n-1 via the descent loop with sentinel d_0 = n-1.

    After the loop, w[j] counts the entries >= j.  Index 0 is never written;
    the array has one extra slot so the inequality check may read w[n] = 0.
    """
    n = d.shape[0]
    w = np.zeros(n + 2, dtype=I64)
    prev = n - 1
    for i1 in range(1, n + 1):
        di = d[i1 - 1]
        if di < prev:
            for j in range(prev, di, -1):
                w[j] = i1 - 1
            if di >= 1:
                w[di] = i1
        prev = di
    if n >= 1:
        for j in range(d[n - 1], 0, -1):
            w[j] = n
    return w


@njit(parallel=True, cache=True)
def par_weights(d, workers):
    """Descent-driven weights over index chunks.

    Chunk interiors are single-writer because the descent ranges (d_i, d_{i-1}]
    partition disjoint value intervals per chunk.  The only value slots two
    chunks can both target are the chunk-final values, so those writes are
    deferred per worker and merged by the master with store-if-larger
    semantics, which is what the sequential loop's write order amounts to.
    """
    n = d.shape[0]
    w = np.zeros(n + 2, dtype=I64)
    chunk = (n + workers - 1) // workers
    defer = np.full((workers, 8), -1, dtype=I64)
    for k in prange(workers):
        x = k * chunk
        y = min(x + chunk, n)
        if x < y:
            prev = d[x - 1] if x > 0 else n - 1
            top_bound = prev
            own_bot = d[y - 1]
            nd = 0
            for i1 in range(x + 1, y + 1):
                di = d[i1 - 1]
                if di < prev:
                    for j in range(prev, di, -1):
                        if j == own_bot or j == top_bound:
                            defer[k, nd] = j
                            defer[k, nd + 1] = i1 - 1
                            nd += 2
                        else:
                            w[j] = i1 - 1
                    if di >= 1:
                        if di == own_bot or di == top_bound:
                            defer[k, nd] = di
                            defer[k, nd + 1] = i1
                            nd += 2
                        else:
                            w[di] = i1
                prev = di
    for k in range(workers):
        t = 0
        while t < 8 and defer[k, t] >= 0:
            j = defer[k, t]
            val = defer[k, t + 1]
            if val > w[j]:
                w[j] = val
            t += 2
    if n >= 1:
        dn = d[n - 1]
        fc = (dn + workers - 1) // workers
        if fc > 0:
            for k in prange(workers):
                a = 1 + k * fc
                b = min(a + fc, dn + 1)
                for j in range(a, b):
                    w[j] = n
    return w


@njit(cache=True)
def seq_first_violation(H, w, c):
    """First k in 1..c violating the inequality, or 0 when all hold."""
    n = H.shape[0] - 1
    Hn = H[n]
    for k in range(1, c + 1):
        wk = w[k]
        lhs = H[k]
        if k <= wk:
            rhs = k * (k - 1) + k * (wk - k) + Hn - H[wk]
        else:
            rhs = k * (k - 1) + Hn - H[k]
        if lhs > rhs:
            return k
    return 0


@njit(parallel=True, cache=True)
def par_observe_violation(H, w, c, workers):
    """Round-robin inequality scan with a shared early-exit flag.

    Returns the smallest violated k any worker observed, or c+1 when none
    did.  Scheduling decides which k trips the flag first, so callers
    canonicalize by re-scanning 1..observed sequentially.
    """
    n = H.shape[0] - 1
    Hn = H[n]
    flag = np.zeros(1, dtype=I64)
    found = np.full(workers, c + 1, dtype=I64)
    for k0 in prange(workers):
        k = k0 + 1
        while k <= c and flag[0] == 0:
            wk = w[k]
            lhs = H[k]
            if k <= wk:
                rhs = k * (k - 1) + k * (wk - k) + Hn - H[wk]
            else:
                rhs = k * (k - 1) + Hn - H[k]
            if lhs > rhs:
                found[k0] = k
                flag[0] = 1
                break
            k += workers
    obs = c + 1
    for k0 in range(workers):
        if found[k0] < obs:
            obs = found[k0]
    return obs


# ---------------------------------------------------------------------------
# candidate admission for the generator
# ---------------------------------------------------------------------------


@njit(cache=True)
def _eg_scratch(svals, H, w):
    """Fill H (prefix sums) and w (weights) for the sorted view; returns the
    corrected Durfee number."""
    n = svals.shape[0]
    q = 0
    for i in range(n):
        q += svals[i]
        H[i + 1] = q
    for j in range(n + 2):
        w[j] = 0
    prev = n - 1
    for i1 in range(1, n + 1):
        di = svals[i1 - 1]
        if di < prev:
            for j in range(prev, di, -1):
                w[j] = i1 - 1
            if di >= 1:
                w[di] = i1
        prev = di
    if n >= 1:
        for j in range(svals[n - 1], 0, -1):
            w[j] = n
    cdur = 0
    i = 1
    while i <= n and svals[i - 1] >= i - 1:
        cdur = i
        i += 1
    return cdur


@njit(cache=True)
def _admit_one(svals, H, w, cdur, hn_t, val_u, a, val_v, b):
    """Inequality check for one candidate through the two-point overlay.

    a and b are the sorted slots that virtually drop by one (block ends of
    u's and v's values); val_u and val_v the values they held.  O(1) reads
    against the shared scratch make each inequality constant time.
    """
    lo = a
    hi = b
    if lo > hi:
        lo = b
        hi = a
    ct = cdur
    if lo + 1 <= ct and svals[lo] - 1 < lo:
        ct = lo
    if hi + 1 <= ct and svals[hi] - 1 < hi:
        ct = hi
    for k in range(1, ct + 1):
        lhs = H[k]
        if lo < k:
            lhs -= 1
        if hi < k:
            lhs -= 1
        wk = w[k]
        if k == val_u:
            wk -= 1
        if k == val_v:
            wk -= 1
        if k <= wk:
            hw = H[wk]
            if lo < wk:
                hw -= 1
            if hi < wk:
                hw -= 1
            rhs = k * (k - 1) + k * (wk - k) + hn_t - hw
        else:
            rhs = k * (k - 1) + hn_t - lhs
        if lhs > rhs:
            return np.uint8(0)
    return np.uint8(1)


@njit(parallel=True, cache=True)
def admit_candidates(svals, block_last, residual, u, pool, workers):
    """Admission bitmap: pool[i] is admitted iff decrementing u and pool[i]
    leaves a graphical residual sequence.

    The prefix sums, weights, and Durfee number of the *current* sorted view
    are computed once per call; each candidate then runs the inequality check
    through a two-point virtual-decrement overlay (u's and v's entries move
    to the ends of their value blocks and drop by one).  Candidates are
    partitioned into contiguous chunks; each worker writes only its own
    admission slots.
    """
    n = svals.shape[0]
    npool = pool.shape[0]
    admitted = np.zeros(npool, dtype=np.uint8)
    if npool == 0:
        return admitted

    H = np.zeros(n + 1, dtype=I64)
    w = np.zeros(n + 2, dtype=I64)
    cdur = _eg_scratch(svals, H, w)
    hn_t = H[n] - 2
    val_u = residual[u]
    a = block_last[val_u]
    chunk = (npool + workers - 1) // workers
    for kk in prange(workers):
        lo_i = kk * chunk
        hi_i = min(lo_i + chunk, npool)
        for ci in range(lo_i, hi_i):
            v = pool[ci]
            val_v = residual[v]
            if val_v == val_u:
                b = a - 1  # same block: u virtually occupies the last slot
            else:
                b = block_last[val_v]
            admitted[ci] = _admit_one(svals, H, w, cdur, hn_t, val_u, a, val_v, b)
    return admitted


# ---------------------------------------------------------------------------
# generation engine
# ---------------------------------------------------------------------------


@njit(cache=True)
def _view_decrement(perm, inv_perm, svals, block_start, block_last, vertex):
    """Unit decrement keeping svals sorted: swap to the value block's end."""
    n = perm.shape[0]
    i = inv_perm[vertex]
    x = svals[i]
    j = block_last[x]
    other = perm[j]
    perm[i] = other
    perm[j] = vertex
    inv_perm[vertex] = j
    inv_perm[other] = i
    svals[j] = x - 1
    if block_start[x] <= j - 1:
        block_last[x] = j - 1
    if j + 1 >= n or svals[j + 1] != x - 1:
        block_last[x - 1] = j
    block_start[x - 1] = j


@njit(parallel=True, cache=True)
def generate_engine(degrees, uniforms, workers, use_shortcut):
    """Full generation loop over a graphical degree vector.

    ``uniforms`` is the pre-drawn random stream; exactly one entry is
    consumed per sampled edge, none per batch-assigned edge, so the
    (graph, trace) output matches a caller drawing lazily from the same
    stream.  Candidate admission is the only parallel region; everything
    between fan-outs is single-threaded, making the output independent of
    the worker count.

    Returns (status, eu, ev, log_terms, draws_used, batches) with status 0
    on success and 1 for the impossible-state guard (empty candidate set).
    """
    n = degrees.shape[0]
    m_total = 0
    for v in range(n):
        m_total += degrees[v]
    m_total //= 2

    eu = np.empty(m_total, dtype=I64)
    ev = np.empty(m_total, dtype=I64)
    log_terms = np.zeros(m_total, dtype=np.float64)
    if n == 0:
        return 0, eu, ev, log_terms, 0, 0

    residual = degrees.copy()
    perm = np.argsort(-degrees, kind="mergesort")
    inv_perm = np.empty(n, dtype=I64)
    for s in range(n):
        inv_perm[perm[s]] = s
    svals = np.empty(n, dtype=I64)
    for s in range(n):
        svals[s] = degrees[perm[s]]
    block_start = np.full(n + 1, -1, dtype=I64)
    block_last = np.full(n + 1, -1, dtype=I64)
    for s in range(n):
        x = svals[s]
        if block_start[x] < 0:
            block_start[x] = s
        block_last[x] = s

    # exact-size CSR adjacency: final degrees are known up front
    adj_off = np.zeros(n + 1, dtype=I64)
    for v in range(n):
        adj_off[v + 1] = adj_off[v] + degrees[v]
    adj = np.empty(2 * m_total, dtype=I64)
    adj_fill = np.zeros(n, dtype=I64)

    stamp = np.full(n, -1, dtype=I64)
    pool = np.empty(n, dtype=I64)
    keep = np.empty(n, dtype=I64)
    admitted = np.empty(n, dtype=np.uint8)
    H = np.zeros(n + 1, dtype=I64)
    w = np.zeros(n + 2, dtype=I64)

    edge_cnt = 0
    draw_cnt = 0
    batches = 0

    while True:
        # least vertex of minimal positive residual degree
        u = -1
        best = np.int64(2) * n
        for v in range(n):
            r = residual[v]
            if r > 0 and r < best:
                best = r
                u = v
        if u == -1:
            break

        # fresh potential pool for u's phase: positive residual, not adjacent
        for ptr in range(adj_off[u], adj_off[u] + adj_fill[u]):
            stamp[adj[ptr]] = u
        psize = 0
        for v in range(n):
            if v != u and residual[v] > 0 and stamp[v] != u:
                pool[psize] = v
                psize += 1

        while residual[u] > 0:
            if psize == 0:
                return 1, eu, ev, log_terms, draw_cnt, batches
            cdur = _eg_scratch(svals, H, w)
            hn_t = H[n] - 2
            val_u = residual[u]
            a = block_last[val_u]
            chunk = (psize + workers - 1) // workers
            for kk in prange(workers):
                lo_i = kk * chunk
                hi_i = min(lo_i + chunk, psize)
                for ci in range(lo_i, hi_i):
                    v = pool[ci]
                    val_v = residual[v]
                    if val_v == val_u:
                        b = a - 1
                    else:
                        b = block_last[val_v]
                    admitted[ci] = _admit_one(
                        svals, H, w, cdur, hn_t, val_u, a, val_v, b
                    )
            ksize = 0
            wsum = 0
            for ci in range(psize):
                if admitted[ci]:
                    keep[ksize] = pool[ci]
                    ksize += 1
                    wsum += residual[pool[ci]]
            if ksize == 0:
                return 1, eu, ev, log_terms, draw_cnt, batches

            if use_shortcut and residual[u] == ksize:
                for ci in range(ksize):
                    v = keep[ci]
                    _view_decrement(perm, inv_perm, svals, block_start, block_last, u)
                    _view_decrement(perm, inv_perm, svals, block_start, block_last, v)
                    residual[u] -= 1
                    residual[v] -= 1
                    adj[adj_off[u] + adj_fill[u]] = v
                    adj_fill[u] += 1
                    adj[adj_off[v] + adj_fill[v]] = u
                    adj_fill[v] += 1
                    if u < v:
                        eu[edge_cnt] = u
                        ev[edge_cnt] = v
                    else:
                        eu[edge_cnt] = v
                        ev[edge_cnt] = u
                    edge_cnt += 1
                batches += 1
                break

            # proportional sampling: cumulative scan against one uniform
            r = uniforms[draw_cnt] * wsum
            draw_cnt += 1
            chosen_i = ksize - 1
            acc = 0
            for ci in range(ksize):
                acc += residual[keep[ci]]
                if acc > r:
                    chosen_i = ci
                    break
            v = keep[chosen_i]
            log_terms[edge_cnt] = np.log(residual[v] / wsum)
            _view_decrement(perm, inv_perm, svals, block_start, block_last, u)
            _view_decrement(perm, inv_perm, svals, block_start, block_last, v)
            residual[u] -= 1
            residual[v] -= 1
            adj[adj_off[u] + adj_fill[u]] = v
            adj_fill[u] += 1
            adj[adj_off[v] + adj_fill[v]] = u
            adj_fill[v] += 1
            if u < v:
                eu[edge_cnt] = u
                ev[edge_cnt] = v
            else:
                eu[edge_cnt] = v
                ev[edge_cnt] = u
            edge_cnt += 1
            # carry the surviving candidates as the next potential pool
            psize = 0
            for ci in range(ksize):
                if ci != chosen_i:
                    pool[psize] = keep[ci]
                    psize += 1

    return 0, eu, ev, log_terms, draw_cnt, batches


# ---------------------------------------------------------------------------
# metrics sweeps
# ---------------------------------------------------------------------------


@njit(parallel=True, cache=True)
def bfs_path_stats(indptr, indices, workers):
    """All-sources BFS.

    Returns (finite ordered-pair count, sum of their distances, diameter,
    per-vertex closeness sums) with per-worker accumulators merged in chunk
    order.
    """
    n = indptr.shape[0] - 1
    chunk = (n + workers - 1) // workers
    pair_cnt = np.zeros(workers, dtype=I64)
    dist_sum = np.zeros(workers, dtype=I64)
    ecc_max = np.zeros(workers, dtype=I64)
    closeness = np.zeros(n, dtype=np.float64)
    for k in prange(workers):
        x = k * chunk
        y = min(x + chunk, n)
        dist = np.empty(n, dtype=I64)
        queue = np.empty(n, dtype=I64)
        for s in range(x, y):
            for t in range(n):
                dist[t] = -1
            dist[s] = 0
            head = 0
            tail = 0
            queue[tail] = s
            tail += 1
            local_sum = 0
            local_cnt = 0
            local_ecc = 0
            while head < tail:
                v = queue[head]
                head += 1
                dv = dist[v]
                if dv > local_ecc:
                    local_ecc = dv
                for ptr in range(indptr[v], indptr[v + 1]):
                    t2 = indices[ptr]
                    if dist[t2] < 0:
                        dist[t2] = dv + 1
                        queue[tail] = t2
                        tail += 1
            local_cnt = tail - 1  # reached vertices besides the source
            for idx in range(1, tail):
                local_sum += dist[queue[idx]]
            pair_cnt[k] += local_cnt
            dist_sum[k] += local_sum
            if local_ecc > ecc_max[k]:
                ecc_max[k] = local_ecc
            if local_cnt > 0 and local_sum > 0:
                closeness[s] = local_cnt / local_sum
    total_pairs = 0
    total_dist = 0
    diameter = 0
    for k in range(workers):
        total_pairs += pair_cnt[k]
        total_dist += dist_sum[k]
        if ecc_max[k] > diameter:
            diameter = ecc_max[k]
    return total_pairs, total_dist, diameter, closeness


@njit(parallel=True, cache=True)
def brandes_betweenness(indptr, indices, workers):
    """Unnormalized betweenness (ordered-pair accumulation) via the standard
    single-source shortest-path dependency accumulation, one source at a time,
    sources chunked across workers with per-worker partial scores merged in
    chunk order."""
    n = indptr.shape[0] - 1
    chunk = (n + workers - 1) // workers
    partial = np.zeros((workers, n), dtype=np.float64)
    for k in prange(workers):
        x = k * chunk
        y = min(x + chunk, n)
        dist = np.empty(n, dtype=I64)
        sigma = np.empty(n, dtype=np.float64)
        delta = np.empty(n, dtype=np.float64)
        order = np.empty(n, dtype=I64)
        for s in range(x, y):
            for t in range(n):
                dist[t] = -1
                sigma[t] = 0.0
                delta[t] = 0.0
            dist[s] = 0
            sigma[s] = 1.0
            head = 0
            tail = 0
            order[tail] = s
            tail += 1
            while head < tail:
                v = order[head]
                head += 1
                dv = dist[v]
                for ptr in range(indptr[v], indptr[v + 1]):
                    t2 = indices[ptr]
                    if dist[t2] < 0:
                        dist[t2] = dv + 1
                        order[tail] = t2
                        tail += 1
                    if dist[t2] == dv + 1:
                        sigma[t2] += sigma[v]
            for idx in range(tail - 1, 0, -1):
                wv = order[idx]
                dw = dist[wv]
                coef = (1.0 + delta[wv]) / sigma[wv]
                for ptr in range(indptr[wv], indptr[wv + 1]):
                    t2 = indices[ptr]
                    if dist[t2] == dw - 1:
                        delta[t2] += sigma[t2] * coef
                if wv != s:
                    partial[k, wv] += delta[wv]
    bc = np.zeros(n, dtype=np.float64)
    for k in range(workers):
        for t in range(n):
            bc[t] += partial[k, t]
    return bc


@njit(parallel=True, cache=True)
def triangle_counts(indptr, indices, workers):
    """Per-vertex triangle counts by ordered-adjacency intersection.

    Requires each CSR neighbor list sorted ascending.  The global triangle
    count is the sum divided by 3.
    """
    n = indptr.shape[0] - 1
    chunk = (n + workers - 1) // workers
    tri = np.zeros(n, dtype=I64)
    for k in prange(workers):
        x = k * chunk
        y = min(x + chunk, n)
        for v in range(x, y):
            cnt = 0
            for pa in range(indptr[v], indptr[v + 1]):
                a = indices[pa]
                # merge-intersect adjacency of v and a
                ia = indptr[v]
                ib = indptr[a]
                ea = indptr[v + 1]
                eb = indptr[a + 1]
                while ia < ea and ib < eb:
                    da = indices[ia]
                    db = indices[ib]
                    if da == db:
                        cnt += 1
                        ia += 1
                        ib += 1
                    elif da < db:
                        ia += 1
                    else:
                        ib += 1
            tri[v] = cnt // 2  # every triangle through v counted for both neighbors
    return tri
