"""Provides text dumps of relations, valuations and combination tables."""

from restheory.monotones import format_ext

# pylint: disable=too-many-arguments


def _prefixed(prefix):
    if len(prefix) > 0:
        prefix += ':'
    return prefix


def dump_relation(pre, prefix='', log=print):
    """Dumps a preorder as a 0/1 matrix. Row a, column b holds 1 when
       a >= b.
    """
    prefix = _prefixed(prefix)
    if pre is None or len(pre) == 0:
        log(prefix + 'No data')
        return
    labels = pre.labels
    width = max(len(label) for label in labels)
    log(prefix + ' ' * width + ' ' + ' '.join(labels))
    for a, row_label in enumerate(labels):
        cells = []
        for b, col_label in enumerate(labels):
            cells.append(('1' if pre.geq(a, b) else '0').rjust(len(col_label)))
        log(prefix + row_label.ljust(width) + ' ' + ' '.join(cells))


def dump_values(labels, values, prefix='', log=print):
    """Dumps a name/value table. values is a sequence indexed like labels,
       or a dict from index to value for partial valuations.
    """
    prefix = _prefixed(prefix)
    if isinstance(values, dict):
        items = [(labels[i], values[i]) for i in sorted(values)]
    else:
        items = list(zip(labels, values))
    if len(items) == 0:
        log(prefix + 'No data')
        return
    width = max(len(label) for label, _ in items)
    for label, value in items:
        log(prefix + label.ljust(width) + ' = ' + format_ext(value))


def dump_table(theory, prefix='', log=print):
    """Dumps the free set, the neutral set and every nonempty entry of the
       combination table, one per line.
    """
    prefix = _prefixed(prefix)
    if theory is None or len(theory) == 0:
        log(prefix + 'No data')
        return
    log(prefix + 'free    = ' + theory.set_label(theory.free))
    log(prefix + 'neutral = ' + theory.set_label(theory.neutral))
    names = theory.names
    width = max(len(name) for name in names)
    for (i, j), value in sorted(theory.table.items()):
        log('{}{} (x) {} = {}'.format(prefix, names[i].rjust(width),
                                     names[j].ljust(width),
                                     theory.set_label(value)))
