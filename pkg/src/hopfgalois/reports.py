"""Check reports.

Every decision procedure in the package returns a Report: an ordered list
of named checks, each a hard pass or fail, optionally carrying a witness
string and numeric data (ranks, dimensions, degree bounds). Reports
aggregate with all(), render one line per check, and serialize to plain
dicts for the command line front end.
"""


class Check:
    def __init__(self, name, ok, witness=None, **data):
        self.name = name
        self.ok = bool(ok)
        self.witness = witness
        self.data = dict(data)

    def as_dict(self):
        out = {"name": self.name, "pass": self.ok}
        if self.witness is not None:
            out["witness"] = self.witness
        for key in sorted(self.data):
            out[key] = self.data[key]
        return out

    def __repr__(self):
        tail = " [%s]" % self.witness if self.witness else ""
        return "%s: %s%s" % (self.name, "pass" if self.ok else "FAIL", tail)


class Report:
    def __init__(self, title=None):
        self.title = title
        self.checks = []

    def add(self, name, ok, witness=None, **data):
        self.checks.append(Check(name, ok, witness, **data))
        return self

    def extend(self, other, prefix=None):
        for check in other.checks:
            name = check.name if prefix is None else "%s.%s" % (prefix, check.name)
            self.checks.append(Check(name, check.ok, check.witness, **check.data))
        return self

    @property
    def ok(self):
        return all(check.ok for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.ok]

    def as_dict(self):
        return {"pass": self.ok, "checks": [check.as_dict() for check in self.checks]}

    def __bool__(self):
        return self.ok

    def __repr__(self):
        head = self.title or "report"
        lines = ["%s: %s" % (head, "pass" if self.ok else "FAIL")]
        lines += ["  " + repr(check) for check in self.checks]
        return "\n".join(lines)
