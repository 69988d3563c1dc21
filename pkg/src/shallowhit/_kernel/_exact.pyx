# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch-and-bound kernels.

Mirror of ``_exact_py``: identical traversal order, identical results
(status, selection, node count) on every input.  See that module for the
algorithm description; this file only re-implements the hot loops in C.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

SAT = 0
UNSAT = 1
GAVE_UP = 2


cdef struct HState:
    int n
    int m
    int t
    long long budget
    long long nodes
    bint overran
    int *ev
    int *eoff
    int *iv
    int *ioff
    int *deg
    char *banned
    int *chosen
    int chosen_len
    int *sol
    int sol_len
    int *cand
    int *nban


cdef bint _edge_addable(HState *s, int j):
    cdef int b
    for b in range(s.eoff[j], s.eoff[j + 1]):
        if s.deg[s.ev[b]] >= s.t:
            return False
    return True


cdef int _h_search(HState *s, int depth):
    cdef int v, j, a, b, cnt, best_v, best_cnt, k, nb, res
    cdef bint saw_gaveup, sat_found
    cdef int *cand = s.cand + depth * s.m
    cdef int *nban = s.nban + depth * s.m
    s.nodes += 1
    if s.budget >= 0 and s.nodes > s.budget:
        s.overran = True
        return GAVE_UP
    best_v = -1
    best_cnt = -1
    for v in range(s.n):
        if s.deg[v] != 0:
            continue
        cnt = 0
        for a in range(s.ioff[v], s.ioff[v + 1]):
            j = s.iv[a]
            if s.banned[j]:
                continue
            if _edge_addable(s, j):
                cnt += 1
        if cnt == 0:
            return UNSAT
        if best_cnt < 0 or cnt < best_cnt:
            best_v = v
            best_cnt = cnt
            if cnt == 1:
                break
    if best_v < 0:
        s.sol_len = s.chosen_len
        for k in range(s.chosen_len):
            s.sol[k] = s.chosen[k]
        return SAT
    cnt = 0
    for a in range(s.ioff[best_v], s.ioff[best_v + 1]):
        j = s.iv[a]
        if s.banned[j]:
            continue
        if _edge_addable(s, j):
            cand[cnt] = j
            cnt += 1
    saw_gaveup = False
    sat_found = False
    nb = 0
    for k in range(cnt):
        j = cand[k]
        for b in range(s.eoff[j], s.eoff[j + 1]):
            s.deg[s.ev[b]] += 1
        s.chosen[s.chosen_len] = j
        s.chosen_len += 1
        res = _h_search(s, depth + 1)
        s.chosen_len -= 1
        for b in range(s.eoff[j], s.eoff[j + 1]):
            s.deg[s.ev[b]] -= 1
        if res == SAT:
            sat_found = True
            break
        if res == GAVE_UP:
            saw_gaveup = True
        s.banned[j] = 1
        nban[nb] = j
        nb += 1
    for k in range(nb):
        s.banned[nban[k]] = 0
    if sat_found:
        return SAT
    if saw_gaveup:
        return GAVE_UP
    return UNSAT


def shallow_hitting(int n, edges, incidence, int t, long long budget=-1):
    cdef HState s
    cdef int m = len(edges)
    cdef int total = 0
    cdef int j, v, pos, status
    for j in range(m):
        total += len(edges[j])
    s.n = n
    s.m = m
    s.t = t
    s.budget = budget
    s.nodes = 0
    s.overran = False
    s.chosen_len = 0
    s.sol_len = -1
    s.ev = <int *> PyMem_Malloc(max(total, 1) * sizeof(int))
    s.eoff = <int *> PyMem_Malloc((m + 1) * sizeof(int))
    s.iv = <int *> PyMem_Malloc(max(total, 1) * sizeof(int))
    s.ioff = <int *> PyMem_Malloc((n + 1) * sizeof(int))
    s.deg = <int *> PyMem_Malloc(max(n, 1) * sizeof(int))
    s.banned = <char *> PyMem_Malloc(max(m, 1) * sizeof(char))
    s.chosen = <int *> PyMem_Malloc((n + 2) * sizeof(int))
    s.sol = <int *> PyMem_Malloc((n + 2) * sizeof(int))
    s.cand = <int *> PyMem_Malloc(max((n + 2) * m, 1) * sizeof(int))
    s.nban = <int *> PyMem_Malloc(max((n + 2) * m, 1) * sizeof(int))
    if (s.ev == NULL or s.eoff == NULL or s.iv == NULL or s.ioff == NULL
            or s.deg == NULL or s.banned == NULL or s.chosen == NULL
            or s.sol == NULL or s.cand == NULL or s.nban == NULL):
        _free_h(&s)
        raise MemoryError()
    try:
        pos = 0
        for j in range(m):
            s.eoff[j] = pos
            for v in edges[j]:
                s.ev[pos] = v
                pos += 1
        s.eoff[m] = pos
        pos = 0
        for v in range(n):
            s.ioff[v] = pos
            s.deg[v] = 0
            for j in incidence[v]:
                s.iv[pos] = j
                pos += 1
        s.ioff[n] = pos
        for j in range(m):
            s.banned[j] = 0
        status = _h_search(&s, 0)
        if status == SAT:
            solution = sorted(s.sol[k] for k in range(s.sol_len))
        else:
            solution = None
        return status, solution, s.nodes
    finally:
        _free_h(&s)


cdef void _free_h(HState *s):
    PyMem_Free(s.ev)
    PyMem_Free(s.eoff)
    PyMem_Free(s.iv)
    PyMem_Free(s.ioff)
    PyMem_Free(s.deg)
    PyMem_Free(s.banned)
    PyMem_Free(s.chosen)
    PyMem_Free(s.sol)
    PyMem_Free(s.cand)
    PyMem_Free(s.nban)


cdef struct MState:
    int n
    int m
    int t
    int r_min
    long long budget
    long long nodes
    bint overran
    int *ev
    int *eoff
    int *deg
    long long cap
    int *chosen
    int chosen_len
    int best
    int *best_sel
    int best_len


cdef void _m_search(MState *s, int i):
    cdef int b
    cdef bint ok
    cdef long long rem
    if s.overran:
        return
    s.nodes += 1
    if s.budget >= 0 and s.nodes > s.budget:
        s.overran = True
        return
    rem = s.m - i
    if s.cap // s.r_min < rem:
        rem = s.cap // s.r_min
    if s.chosen_len + rem <= s.best:
        return
    if i == s.m:
        s.best = s.chosen_len
        s.best_len = s.chosen_len
        for b in range(s.chosen_len):
            s.best_sel[b] = s.chosen[b]
        return
    ok = True
    for b in range(s.eoff[i], s.eoff[i + 1]):
        if s.deg[s.ev[b]] >= s.t:
            ok = False
            break
    if ok:
        for b in range(s.eoff[i], s.eoff[i + 1]):
            s.deg[s.ev[b]] += 1
        s.cap -= s.eoff[i + 1] - s.eoff[i]
        s.chosen[s.chosen_len] = i
        s.chosen_len += 1
        _m_search(s, i + 1)
        s.chosen_len -= 1
        s.cap += s.eoff[i + 1] - s.eoff[i]
        for b in range(s.eoff[i], s.eoff[i + 1]):
            s.deg[s.ev[b]] -= 1
    _m_search(s, i + 1)


def max_shallow(int n, edges, incidence, int t, long long budget=-1):
    cdef MState s
    cdef int m = len(edges)
    cdef int total = 0
    cdef int j, v, pos, r_min
    for j in range(m):
        total += len(edges[j])
    r_min = 1
    if m > 0:
        r_min = len(edges[0])
        for j in range(1, m):
            if len(edges[j]) < r_min:
                r_min = len(edges[j])
    s.n = n
    s.m = m
    s.t = t
    s.r_min = r_min
    s.budget = budget
    s.nodes = 0
    s.overran = False
    s.cap = <long long> n * t
    s.chosen_len = 0
    s.best = -1
    s.best_len = 0
    s.ev = <int *> PyMem_Malloc(max(total, 1) * sizeof(int))
    s.eoff = <int *> PyMem_Malloc((m + 1) * sizeof(int))
    s.deg = <int *> PyMem_Malloc(max(n, 1) * sizeof(int))
    s.chosen = <int *> PyMem_Malloc((m + 1) * sizeof(int))
    s.best_sel = <int *> PyMem_Malloc((m + 1) * sizeof(int))
    if (s.ev == NULL or s.eoff == NULL or s.deg == NULL or s.chosen == NULL
            or s.best_sel == NULL):
        _free_m(&s)
        raise MemoryError()
    try:
        pos = 0
        for j in range(m):
            s.eoff[j] = pos
            for v in edges[j]:
                s.ev[pos] = v
                pos += 1
        s.eoff[m] = pos
        for v in range(n):
            s.deg[v] = 0
        _m_search(&s, 0)
        best = s.best if s.best > 0 else 0
        sel = [s.best_sel[j] for j in range(s.best_len)]
        return best, sel, not s.overran, s.nodes
    finally:
        _free_m(&s)


cdef void _free_m(MState *s):
    PyMem_Free(s.ev)
    PyMem_Free(s.eoff)
    PyMem_Free(s.deg)
    PyMem_Free(s.chosen)
    PyMem_Free(s.best_sel)
