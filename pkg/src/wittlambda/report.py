"""Check records and the two-part report format (human table + machine block).

A report never contains timings or anything else that varies between runs,
so identical inputs and seed give byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: str = ""
    detail: str = ""

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIP):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError(f"failed check {self.name!r} needs a witness")

    @property
    def passed(self):
        return self.status == PASS

    @property
    def failed(self):
        return self.status == FAIL


@dataclass
class Report:
    command: str = ""
    checks: list = field(default_factory=list)
    values: list = field(default_factory=list)

    def add(self, check):
        self.checks.append(check)
        return check

    def record(self, name, ok, witness="", detail=""):
        """Add a pass/fail check; ``witness`` is only kept on failure."""
        if ok:
            return self.add(Check(name, PASS, "", detail))
        return self.add(Check(name, FAIL, witness or "(no witness)", detail))

    def skip(self, name, detail=""):
        return self.add(Check(name, SKIP, "", detail))

    def value(self, key, val):
        """Attach an output value (shown in both the table and machine block)."""
        self.values.append((key, str(val)))

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.add(Check(prefix + c.name, c.status, c.witness, c.detail))
        for k, v in other.values:
            self.values.append((prefix + k, v))
        return self

    @property
    def ok(self):
        return not any(c.failed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if c.failed]

    @property
    def exit_code(self):
        return 0 if self.ok else 1

    def counts(self):
        return {s: sum(c.status == s for c in self.checks) for s in (PASS, FAIL, SKIP)}

    def human(self):
        lines = []
        if self.command:
            lines.append(f"$ {self.command}")
        for k, v in self.values:
            lines.append(f"{k} = {v}")
        if self.checks:
            width = max(len(c.name) for c in self.checks)
            for c in self.checks:
                line = f"[{c.status.upper():4}] {c.name.ljust(width)}"
                extra = c.witness if c.failed else c.detail
                if extra:
                    line += f"  {extra}"
                lines.append(line.rstrip())
            n = self.counts()
            lines.append(f"{n[PASS]} passed, {n[FAIL]} failed, {n[SKIP]} skipped")
        return "\n".join(lines)

    def machine(self):
        lines = ["```wittlambda-report"]
        if self.command:
            lines.append(f"command={_flat(self.command)}")
        for k, v in self.values:
            lines.append(f"value.{_flat(k)}={_flat(v)}")
        for i, c in enumerate(self.checks, 1):
            key = f"check.{i:03d}"
            lines.append(f"{key}.name={_flat(c.name)}")
            lines.append(f"{key}.status={c.status}")
            if c.witness:
                lines.append(f"{key}.witness={_flat(c.witness)}")
        n = self.counts()
        lines.append(f"summary.pass={n[PASS]}")
        lines.append(f"summary.fail={n[FAIL]}")
        lines.append(f"summary.skip={n[SKIP]}")
        lines.append(f"summary.exit={self.exit_code}")
        lines.append("```")
        return "\n".join(lines)

    def render(self):
        return self.human() + "\n\n" + self.machine() + "\n"


def _flat(s):
    return str(s).replace("\\", "\\\\").replace("\n", "\\n")
