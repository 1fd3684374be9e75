"""Pure-Python truth-table kernel.

A formula is passed as a postfix program: a non-negative code pushes the
column of that variable, ``IMPLIES`` pops two columns ``a, b`` and pushes
``~a | b``. Columns are Python ints used as bitsets over the ``2**nvars``
rows; row ``r`` gives variable ``i`` the value ``(r >> (nvars - 1 - i)) & 1``.
"""

IMPLIES = -1

_column_cache = {}


def variable_column(shift, nvars):
    """Bitset of the rows in which the bit at ``shift`` of the row number is set."""
    key = (shift, nvars)
    col = _column_cache.get(key)
    if col is None:
        half = 1 << shift
        col = ((1 << half) - 1) << half
        width = half << 1
        total = 1 << nvars
        while width < total:
            col |= col << width
            width <<= 1
        _column_cache[key] = col
    return col


def truth_mask(program, nvars):
    full = (1 << (1 << nvars)) - 1
    top = nvars - 1
    stack = []
    push = stack.append
    pop = stack.pop
    for code in program:
        if code == IMPLIES:
            if len(stack) < 2:
                raise ValueError("malformed formula program")
            b = pop()
            a = pop()
            push((~a | b) & full)
        elif 0 <= code < nvars:
            push(variable_column(top - code, nvars))
        else:
            raise ValueError("variable code out of range")
    if len(stack) != 1:
        raise ValueError("malformed formula program")
    return stack[0]
