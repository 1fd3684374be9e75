# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled truth-table kernel; same contract as ``_truthtable_py``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

IMPLIES = -1

cdef uint64_t[6] _LOW = [
    0xAAAAAAAAAAAAAAAAULL,
    0xCCCCCCCCCCCCCCCCULL,
    0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL,
    0xFFFF0000FFFF0000ULL,
    0xFFFFFFFF00000000ULL,
]


def truth_mask(program, int nvars):
    if nvars < 0 or nvars > 30:
        raise ValueError("variable count out of range")
    cdef Py_ssize_t nrows = (<Py_ssize_t>1) << nvars
    cdef Py_ssize_t nwords = (nrows + 63) >> 6
    cdef Py_ssize_t n = len(program)
    cdef Py_ssize_t i, w, sp = 0, depth = 0
    cdef long code
    cdef int shift
    cdef uint64_t fill
    cdef uint64_t *a
    cdef uint64_t *b
    cdef long *prog = <long *> malloc(max(n, 1) * sizeof(long))
    if prog == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            prog[i] = program[i]
            if prog[i] == IMPLIES:
                sp -= 1
                if sp < 1:
                    raise ValueError("malformed formula program")
            elif 0 <= prog[i] < nvars:
                sp += 1
                if sp > depth:
                    depth = sp
            else:
                raise ValueError("variable code out of range")
        if sp != 1:
            raise ValueError("malformed formula program")
        stack = <uint64_t *> malloc(depth * nwords * sizeof(uint64_t))
        if stack == NULL:
            raise MemoryError()
        try:
            sp = 0
            for i in range(n):
                code = prog[i]
                if code == IMPLIES:
                    sp -= 1
                    a = stack + (sp - 1) * nwords
                    b = stack + sp * nwords
                    for w in range(nwords):
                        a[w] = ~a[w] | b[w]
                else:
                    a = stack + sp * nwords
                    shift = nvars - 1 - code
                    if shift < 6:
                        fill = _LOW[shift]
                        for w in range(nwords):
                            a[w] = fill
                    else:
                        for w in range(nwords):
                            a[w] = 0xFFFFFFFFFFFFFFFFULL if (w >> (shift - 6)) & 1 else 0
                    sp += 1
            if nrows < 64:
                stack[0] &= ((<uint64_t>1) << nrows) - 1
            raw = (<char *> stack)[:nwords * 8]
        finally:
            free(stack)
    finally:
        free(prog)
    return int.from_bytes(raw, "little")
