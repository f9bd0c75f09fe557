"""Provides the Verdict class, the result of every check which may
   legitimately fail on its input.
"""


class Verdict:
    """Outcome of a property check.

       holds is True or False. witness is the lexicographically first
       violation found (None when the property holds) and note is an
       optional human readable remark, such as which condition certified
       a mediating map.
    """

    def __init__(self, holds, witness=None, note=None):
        self.holds = bool(holds)
        self.witness = witness
        self.note = note

    def __bool__(self):
        return self.holds

    def __eq__(self, other):
        if isinstance(other, bool):
            return self.holds == other
        if isinstance(other, Verdict):
            return (self.holds, self.witness, self.note) == \
                   (other.holds, other.witness, other.note)
        return NotImplemented

    def __hash__(self):
        return hash((self.holds, repr(self.witness), self.note))

    def __repr__(self):
        return 'Verdict({}, witness={!r}, note={!r})'.format(
            self.holds, self.witness, self.note)

    def to_json(self):
        result = {'holds': self.holds}
        if self.witness is not None:
            result['witness'] = jsonable(self.witness)
        if self.note is not None:
            result['note'] = self.note
        return result


def jsonable(value):
    if isinstance(value, (tuple, list)):
        return [jsonable(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)
