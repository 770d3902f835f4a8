"""Compiled kernels; same contract as ``vincular.kernels.pure``.

Patterns arrive as tuples ``(letters, blocks)``.  Words are built in
C int arrays; values never exceed 23 so the "used" set fits a bitmask.
"""

BACKEND = "cython"

cdef enum:
    MAX_WORD = 24
    MAX_PATTERNS = 32
    MAX_K = 9


cdef struct Typed:
    # single-dash length-3 pattern: kind 0 = blocks (1,2), kind 1 = blocks (2,1)
    int kind
    int a
    int b
    int c


cdef bint _iso3(int x, int y, int z, int a, int b, int c) noexcept:
    if (x < y) != (a < b):
        return 0
    if (x < z) != (a < c):
        return 0
    return (y < z) == (b < c)


cdef bint _match(int* word, int n, int* letters, int* blens, int nb, int* suffix,
                 int* sel, int bi, int minpos, int done) noexcept:
    cdef int s, j, t, x, lx, blen, ok
    if bi == nb:
        return 1
    blen = blens[bi]
    for s in range(minpos, n - suffix[bi] + 1):
        ok = 1
        for j in range(blen):
            x = word[s + j]
            lx = letters[done + j]
            for t in range(done + j):
                if (sel[t] < x) != (letters[t] < lx):
                    ok = 0
                    break
            if not ok:
                break
            sel[done + j] = x
        if ok and _match(word, n, letters, blens, nb, suffix, sel, bi + 1, s + blen, done + blen):
            return 1
    return 0


cdef bint _contains_c(int* word, int n, int* letters, int k, int* blens, int nb) noexcept:
    cdef int suffix[MAX_K + 1]
    cdef int sel[MAX_K]
    cdef int i
    if n < k:
        return 0
    suffix[nb] = 0
    for i in range(nb - 1, -1, -1):
        suffix[i] = suffix[i + 1] + blens[i]
    return _match(word, n, letters, blens, nb, suffix, sel, 0, 0, 0)


cdef int _load_generic(pattern, int* gl, int* gb, int* gk, int* gnb, int slot) except -1:
    letters, blocks = pattern
    cdef int k = len(letters)
    cdef int nb = len(blocks)
    cdef int j
    if k > MAX_K or nb > MAX_K:
        raise ValueError("pattern longer than 9 letters")
    for j in range(k):
        gl[slot * MAX_K + j] = letters[j]
    for j in range(nb):
        gb[slot * MAX_K + j] = blocks[j]
    gk[slot] = k
    gnb[slot] = nb
    return 0


cdef int _prep(patterns, Typed* tp, int* ntp_out, int* gl, int* gb, int* gk, int* gnb,
               int* ng_out) except -1:
    cdef int ntp = 0, ng = 0
    for letters, blocks in patterns:
        if len(letters) == 3 and len(blocks) == 2:
            if ntp >= MAX_PATTERNS:
                raise ValueError("too many patterns")
            tp[ntp].kind = 0 if blocks[0] == 1 else 1
            tp[ntp].a = letters[0]
            tp[ntp].b = letters[1]
            tp[ntp].c = letters[2]
            ntp += 1
        else:
            if ng >= MAX_PATTERNS:
                raise ValueError("too many patterns")
            _load_generic((letters, blocks), gl, gb, gk, gnb, ng)
            ng += 1
    ntp_out[0] = ntp
    ng_out[0] = ng
    return 0


cdef bint _new_occ(int* word, int m, Typed* tp, int ntp,
                   int ng, int* gl, int* gb, int* gk, int* gnb) noexcept:
    # Only occurrences ending at the last position can be new on a clean prefix.
    cdef int t, i, j, x, y, z
    if m >= 3:
        z = word[m - 1]
        for t in range(ntp):
            if tp[t].kind == 0:
                y = word[m - 2]
                if (y < z) == (tp[t].b < tp[t].c):
                    for i in range(m - 2):
                        x = word[i]
                        if (x < y) == (tp[t].a < tp[t].b) and (x < z) == (tp[t].a < tp[t].c):
                            return 1
            else:
                for j in range(m - 2):
                    if _iso3(word[j], word[j + 1], z, tp[t].a, tp[t].b, tp[t].c):
                        return 1
    for t in range(ng):
        if _contains_c(word, m, gl + t * MAX_K, gk[t], gb + t * MAX_K, gnb[t]):
            return 1
    return 0


cdef unsigned long long _dfs_count(int* word, int m, int n, unsigned int used,
                                   Typed* tp, int ntp,
                                   int ng, int* gl, int* gb, int* gk, int* gnb) noexcept:
    cdef unsigned long long total = 0
    cdef int v
    for v in range(1, n + 1):
        if used & ((<unsigned int> 1) << v):
            continue
        word[m] = v
        if not _new_occ(word, m + 1, tp, ntp, ng, gl, gb, gk, gnb):
            if m + 1 == n:
                total += 1
            else:
                total += _dfs_count(word, m + 1, n, used | ((<unsigned int> 1) << v),
                                    tp, ntp, ng, gl, gb, gk, gnb)
    return total


cdef void _dfs_list(int* word, int m, int n, unsigned int used,
                    Typed* tp, int ntp,
                    int ng, int* gl, int* gb, int* gk, int* gnb, list out):
    cdef int v, i
    for v in range(1, n + 1):
        if used & ((<unsigned int> 1) << v):
            continue
        word[m] = v
        if not _new_occ(word, m + 1, tp, ntp, ng, gl, gb, gk, gnb):
            if m + 1 == n:
                out.append(tuple([word[i] for i in range(n)]))
            else:
                _dfs_list(word, m + 1, n, used | ((<unsigned int> 1) << v),
                          tp, ntp, ng, gl, gb, gk, gnb, out)


cdef bint _dfs_closure(int* word, int m, int n, unsigned int used,
                       Typed* tp, int ntp,
                       int ng, int* gl, int* gb, int* gk, int* gnb,
                       int* el, int ek, int* eb, int enb) noexcept:
    # Leaves word[0..n-1] holding the counterexample when returning 1.
    cdef int v
    for v in range(1, n + 1):
        if used & ((<unsigned int> 1) << v):
            continue
        word[m] = v
        if not _new_occ(word, m + 1, tp, ntp, ng, gl, gb, gk, gnb):
            if m + 1 == n:
                if _contains_c(word, n, el, ek, eb, enb):
                    return 1
            elif _dfs_closure(word, m + 1, n, used | ((<unsigned int> 1) << v),
                              tp, ntp, ng, gl, gb, gk, gnb, el, ek, eb, enb):
                return 1
    return 0


cdef unsigned long long _dfs_naive(int* word, int m, int n, unsigned int used,
                                   int np, int* gl, int* gb, int* gk, int* gnb) noexcept:
    cdef unsigned long long total = 0
    cdef int v, t
    if m == n:
        for t in range(np):
            if _contains_c(word, n, gl + t * MAX_K, gk[t], gb + t * MAX_K, gnb[t]):
                return 0
        return 1
    for v in range(1, n + 1):
        if used & ((<unsigned int> 1) << v):
            continue
        word[m] = v
        total += _dfs_naive(word, m + 1, n, used | ((<unsigned int> 1) << v),
                            np, gl, gb, gk, gnb)
    return total


cdef bint _dfs_impl(int* word, int m, int n, unsigned int used,
                    int* pl, int pk, int* pb, int pnb,
                    int* ql, int qk, int* qb, int qnb) noexcept:
    cdef int v
    if m == n:
        return (_contains_c(word, n, pl, pk, pb, pnb)
                and not _contains_c(word, n, ql, qk, qb, qnb))
    for v in range(1, n + 1):
        if used & ((<unsigned int> 1) << v):
            continue
        word[m] = v
        if _dfs_impl(word, m + 1, n, used | ((<unsigned int> 1) << v),
                     pl, pk, pb, pnb, ql, qk, qb, qnb):
            return 1
    return 0


cdef int _check_n(int n) except -1:
    if n < 0 or n >= MAX_WORD:
        raise ValueError(f"length {n} outside the kernel range 0..{MAX_WORD - 1}")
    return 0


def contains(word, letters, blocks):
    """Generic vincular containment on a word of distinct integers."""
    cdef int w[MAX_WORD]
    cdef int lt[MAX_K]
    cdef int bl[MAX_K]
    cdef int n = len(word)
    cdef int k = len(letters)
    cdef int nb = len(blocks)
    cdef int i
    _check_n(n)
    if k > MAX_K or nb > MAX_K:
        raise ValueError("pattern longer than 9 letters")
    for i in range(n):
        w[i] = word[i]
    for i in range(k):
        lt[i] = letters[i]
    for i in range(nb):
        bl[i] = blocks[i]
    return bool(_contains_c(w, n, lt, k, bl, nb))


def count_avoiders(n, patterns):
    """|S_n(P)| by pruned depth-first search (values tried in increasing order)."""
    cdef Typed tp[MAX_PATTERNS]
    cdef int gl[MAX_PATTERNS * MAX_K]
    cdef int gb[MAX_PATTERNS * MAX_K]
    cdef int gk[MAX_PATTERNS]
    cdef int gnb[MAX_PATTERNS]
    cdef int word[MAX_WORD]
    cdef int ntp = 0, ng = 0
    cdef int cn = n
    _check_n(cn)
    _prep(patterns, tp, &ntp, gl, gb, gk, gnb, &ng)
    if cn == 0:
        return 1
    return _dfs_count(word, 0, cn, 0, tp, ntp, ng, gl, gb, gk, gnb)


def list_avoiders(n, patterns):
    """All avoiders of length n, in lexicographic order."""
    cdef Typed tp[MAX_PATTERNS]
    cdef int gl[MAX_PATTERNS * MAX_K]
    cdef int gb[MAX_PATTERNS * MAX_K]
    cdef int gk[MAX_PATTERNS]
    cdef int gnb[MAX_PATTERNS]
    cdef int word[MAX_WORD]
    cdef int ntp = 0, ng = 0
    cdef int cn = n
    _check_n(cn)
    _prep(patterns, tp, &ntp, gl, gb, gk, gnb, &ng)
    out = []
    if cn == 0:
        return [()]
    _dfs_list(word, 0, cn, 0, tp, ntp, ng, gl, gb, gk, gnb, out)
    return out


def count_avoiders_naive(n, patterns):
    """Independent oracle: filter all n! permutations through the generic matcher."""
    cdef int gl[MAX_PATTERNS * MAX_K]
    cdef int gb[MAX_PATTERNS * MAX_K]
    cdef int gk[MAX_PATTERNS]
    cdef int gnb[MAX_PATTERNS]
    cdef int word[MAX_WORD]
    cdef int np = 0
    cdef int cn = n
    _check_n(cn)
    for pattern in patterns:
        if np >= MAX_PATTERNS:
            raise ValueError("too many patterns")
        _load_generic(pattern, gl, gb, gk, gnb, np)
        np += 1
    if cn == 0:
        return 1
    return _dfs_naive(word, 0, cn, 0, np, gl, gb, gk, gnb)


def closure_counterexample(n, premise, extra):
    """Lexicographically least avoider of ``premise`` (length n) containing ``extra``."""
    cdef Typed tp[MAX_PATTERNS]
    cdef int gl[MAX_PATTERNS * MAX_K]
    cdef int gb[MAX_PATTERNS * MAX_K]
    cdef int gk[MAX_PATTERNS]
    cdef int gnb[MAX_PATTERNS]
    cdef int el[MAX_K]
    cdef int eb[MAX_K]
    cdef int word[MAX_WORD]
    cdef int ntp = 0, ng = 0
    cdef int ek, enb, i
    cdef int cn = n
    _check_n(cn)
    _prep(premise, tp, &ntp, gl, gb, gk, gnb, &ng)
    letters, blocks = extra
    ek = len(letters)
    enb = len(blocks)
    if ek > MAX_K or enb > MAX_K:
        raise ValueError("pattern longer than 9 letters")
    for i in range(ek):
        el[i] = letters[i]
    for i in range(enb):
        eb[i] = blocks[i]
    if cn == 0:
        return None
    if _dfs_closure(word, 0, cn, 0, tp, ntp, ng, gl, gb, gk, gnb, el, ek, eb, enb):
        return tuple([word[i] for i in range(cn)])
    return None


def implication_counterexample(n, pattern, implied):
    """Lexicographically least length-n permutation containing ``pattern`` but not ``implied``."""
    cdef int pl[MAX_K]
    cdef int pb[MAX_K]
    cdef int ql[MAX_K]
    cdef int qb[MAX_K]
    cdef int word[MAX_WORD]
    cdef int pk, pnb, qk, qnb, i
    cdef int cn = n
    _check_n(cn)
    letters, blocks = pattern
    pk = len(letters)
    pnb = len(blocks)
    for i in range(pk):
        pl[i] = letters[i]
    for i in range(pnb):
        pb[i] = blocks[i]
    letters, blocks = implied
    qk = len(letters)
    qnb = len(blocks)
    for i in range(qk):
        ql[i] = letters[i]
    for i in range(qnb):
        qb[i] = blocks[i]
    if pk > MAX_K or pnb > MAX_K or qk > MAX_K or qnb > MAX_K:
        raise ValueError("pattern longer than 9 letters")
    if cn == 0:
        return None
    if _dfs_impl(word, 0, cn, 0, pl, pk, pb, pnb, ql, qk, qb, qnb):
        return tuple([word[i] for i in range(cn)])
    return None
