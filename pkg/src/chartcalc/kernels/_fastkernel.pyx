# cython: language_level=3
"""Compiled implementation of the hot kernels.

Mirrors chartcalc.kernels.pykernel exactly; see that module for the
semantics.  Inputs are Python lists of ints, converted once to C arrays.
"""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "cython"


cdef int* _to_c(list xs) except NULL:
    cdef Py_ssize_t n = len(xs)
    cdef int* buf = <int*> malloc(n * sizeof(int) if n else sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = xs[i]
    return buf


def face_orbits(list twin, list snext):
    cdef Py_ssize_t n = len(twin)
    cdef int* ctwin = _to_c(twin)
    cdef int* csnext = _to_c(snext)
    cdef int* face = <int*> malloc(n * sizeof(int) if n else sizeof(int))
    if face == NULL:
        free(ctwin); free(csnext)
        raise MemoryError()
    cdef Py_ssize_t start
    cdef int d, nfaces = 0
    try:
        for start in range(n):
            face[start] = -1
        for start in range(n):
            if face[start] >= 0:
                continue
            d = <int> start
            while face[d] < 0:
                face[d] = nfaces
                d = csnext[ctwin[d]]
            nfaces += 1
        return [face[start] for start in range(n)]
    finally:
        free(ctwin); free(csnext); free(face)


def component_ids(list twin, list snext):
    cdef Py_ssize_t n = len(twin)
    cdef int* ctwin = _to_c(twin)
    cdef int* csnext = _to_c(snext)
    cdef int* comp = <int*> malloc(n * sizeof(int) if n else sizeof(int))
    cdef int* stack = <int*> malloc(n * sizeof(int) if n else sizeof(int))
    if comp == NULL or stack == NULL:
        free(ctwin); free(csnext)
        if comp != NULL:
            free(comp)
        if stack != NULL:
            free(stack)
        raise MemoryError()
    cdef Py_ssize_t start
    cdef int d, e, k, top, ncomp = 0
    try:
        for start in range(n):
            comp[start] = -1
        for start in range(n):
            if comp[start] >= 0:
                continue
            top = 0
            stack[top] = <int> start
            top += 1
            comp[start] = ncomp
            while top > 0:
                top -= 1
                d = stack[top]
                for k in range(2):
                    e = ctwin[d] if k == 0 else csnext[d]
                    if comp[e] < 0:
                        comp[e] = ncomp
                        stack[top] = e
                        top += 1
            ncomp += 1
        return [comp[start] for start in range(n)]
    finally:
        free(ctwin); free(csnext); free(comp); free(stack)


def min_encoding(list twin, list snext, list color, list members):
    cdef Py_ssize_t n = len(twin)
    cdef Py_ssize_t size = len(members)
    cdef int* ctwin = _to_c(twin)
    cdef int* csnext = _to_c(snext)
    cdef int* ccolor = _to_c(color)
    cdef int* order = <int*> malloc(size * sizeof(int) if size else sizeof(int))
    cdef int* rank = <int*> malloc(n * sizeof(int) if n else sizeof(int))
    cdef int* enc = <int*> malloc(3 * size * sizeof(int) if size else sizeof(int))
    cdef int* best = <int*> malloc(3 * size * sizeof(int) if size else sizeof(int))
    cdef int* best_order = <int*> malloc(size * sizeof(int) if size else sizeof(int))
    if order == NULL or rank == NULL or enc == NULL or best == NULL or best_order == NULL:
        free(ctwin); free(csnext); free(ccolor)
        raise MemoryError()
    cdef bint have_best = False
    cdef Py_ssize_t si, i, j
    cdef int start, d, e, k, head, filled, cmp_res
    try:
        for si in range(size):
            start = members[si]
            # BFS relabeling from `start`; neighbor order: twin then snext.
            for i in range(size):
                rank[members[i]] = -1
            order[0] = start
            rank[start] = 0
            filled = 1
            head = 0
            while head < filled:
                d = order[head]
                head += 1
                for k in range(2):
                    e = ctwin[d] if k == 0 else csnext[d]
                    if rank[e] < 0:
                        rank[e] = filled
                        order[filled] = e
                        filled += 1
            for i in range(size):
                d = order[i]
                enc[3 * i] = rank[ctwin[d]]
                enc[3 * i + 1] = rank[csnext[d]]
                enc[3 * i + 2] = ccolor[d]
            if not have_best:
                cmp_res = -1
            else:
                cmp_res = 0
                for i in range(3 * size):
                    if enc[i] != best[i]:
                        cmp_res = -1 if enc[i] < best[i] else 1
                        break
            if cmp_res < 0:
                for i in range(3 * size):
                    best[i] = enc[i]
                for i in range(size):
                    best_order[i] = order[i]
                have_best = True
        return (
            tuple(best[i] for i in range(3 * size)),
            [best_order[i] for i in range(size)],
        )
    finally:
        free(ctwin); free(csnext); free(ccolor)
        free(order); free(rank); free(enc); free(best); free(best_order)
