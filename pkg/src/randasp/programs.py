"""Propositional normal logic programs and reduct-based answer set semantics.

Atoms are dense integer indices in [0, n).  A rule is

    head <- pos_body[0], ..., not neg_body[0], ...

with all body atoms pairwise distinct.  A program is a set of rules over a
fixed universe size n; an interpretation is a subset of [0, n) held as a
bitmask.  The reduct/least-model checker in this module is the trusted
reference semantics; the specialized machinery for negative two-literal
programs lives in `solver`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple


class Rule(NamedTuple):
    """One rule. Bodies are sorted tuples of atom indices (canonical form)."""

    head: int
    pos_body: tuple[int, ...] = ()
    neg_body: tuple[int, ...] = ()

    @property
    def is_n2(self) -> bool:
        """True for the negative two-literal form `a <- not b`."""
        return not self.pos_body and len(self.neg_body) == 1

    @property
    def is_contradiction(self) -> bool:
        """True for `a <- not a` (constraint-like self-loop)."""
        return self.is_n2 and self.neg_body[0] == self.head


def make_rule(head: int, pos_body: Iterable[int] = (), neg_body: Iterable[int] = ()) -> Rule:
    """Build a rule in canonical form, checking body-atom distinctness."""
    pos = tuple(sorted(pos_body))
    neg = tuple(sorted(neg_body))
    body = pos + neg
    if len(set(body)) != len(body):
        raise ValueError(f"body atoms must be pairwise distinct: {body}")
    return Rule(head, pos, neg)


def pure_rule(head: int, body: int) -> Rule:
    """`head <- not body` (head == body yields a contradiction rule)."""
    return Rule(head, (), (body,))


@dataclass(frozen=True)
class Program:
    """A finite set of rules over atoms 0..n-1 (set semantics, deduplicated).

    `rules` is stored as a canonically sorted tuple so iteration order,
    equality and serialization are deterministic.  `symbols`, when present,
    maps atom index -> display name for parsed files; it never participates
    in equality.
    """

    n: int
    rules: tuple[Rule, ...]
    symbols: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __init__(self, n: int, rules: Iterable[Rule] = (), symbols=None):
        if n < 0:
            raise ValueError("universe size must be non-negative")
        canon = tuple(sorted(set(rules)))
        for r in canon:
            body = r.pos_body + r.neg_body
            if len(set(body)) != len(body):
                raise ValueError(f"body atoms must be pairwise distinct in {r}")
            if tuple(sorted(r.pos_body)) != r.pos_body or tuple(sorted(r.neg_body)) != r.neg_body:
                raise ValueError(f"rule bodies must be sorted (use make_rule): {r}")
            for a in (r.head, *body):
                if not 0 <= a < n:
                    raise ValueError(f"atom {a} out of universe [0, {n})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rules", canon)
        object.__setattr__(self, "symbols", tuple(symbols) if symbols is not None else None)

    @property
    def is_n2(self) -> bool:
        return all(r.is_n2 for r in self.rules)

    @property
    def is_positive(self) -> bool:
        return all(not r.neg_body for r in self.rules)

    @property
    def is_negative(self) -> bool:
        return all(not r.pos_body for r in self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def atom_name(self, i: int) -> str:
        if self.symbols is not None and i < len(self.symbols):
            return self.symbols[i]
        return f"a{i}"


@dataclass(frozen=True)
class AtomSet:
    """A subset of the atom universe [0, n), bitmask representation."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("universe size must be non-negative")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} outside universe of size {self.n}")

    @classmethod
    def from_atoms(cls, n: int, atoms: Iterable[int]) -> "AtomSet":
        m = 0
        for a in atoms:
            if not 0 <= a < n:
                raise ValueError(f"atom {a} out of universe [0, {n})")
            m |= 1 << a
        return cls(n, m)

    @classmethod
    def empty(cls, n: int) -> "AtomSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "AtomSet":
        return cls(n, (1 << n) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if (self.mask >> i) & 1)

    def __contains__(self, a: int) -> bool:
        return 0 <= a < self.n and (self.mask >> a) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def issubset(self, other: "AtomSet") -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self) -> str:
        return f"AtomSet(n={self.n}, {{{','.join(map(str, self.members))}}})"


def _require_same_universe(p_n: int, s: AtomSet) -> None:
    if s.n != p_n:
        raise ValueError(f"universe-size mismatch: program n={p_n}, set n={s.n}")


def satisfies(rule: Rule, s: AtomSet) -> bool:
    """Classical satisfaction: head holds whenever the body holds under s."""
    for a in (rule.head, *rule.pos_body, *rule.neg_body):
        if not 0 <= a < s.n:
            raise ValueError(f"universe-size mismatch: atom {a} not in [0, {s.n})")
    if (s.mask >> rule.head) & 1:
        return True
    if any(not (s.mask >> b) & 1 for b in rule.pos_body):
        return True  # positive body not contained
    return any((s.mask >> c) & 1 for c in rule.neg_body)  # negative body blocked


def reduct(p: Program, s: AtomSet) -> Program:
    """Delete rules whose negative body meets s, strip negation from the rest."""
    _require_same_universe(p.n, s)
    kept = []
    for r in p.rules:
        if any((s.mask >> c) & 1 for c in r.neg_body):
            continue
        kept.append(Rule(r.head, r.pos_body, ()))
    return Program(p.n, kept)


def least_model(p: Program) -> AtomSet:
    """Least fixed point of the immediate-consequence operator of a positive program.

    Queue-based propagation, linear in total body size.
    """
    if not p.is_positive:
        raise ValueError("least_model requires a positive program")
    counts = []  # unsatisfied positive-body atoms per rule
    watchers: dict[int, list[int]] = {}
    queue: list[int] = []
    derived = 0
    for i, r in enumerate(p.rules):
        counts.append(len(r.pos_body))
        if not r.pos_body:
            queue.append(i)
        for b in r.pos_body:
            watchers.setdefault(b, []).append(i)
    while queue:
        i = queue.pop()
        h = p.rules[i].head
        if (derived >> h) & 1:
            continue
        derived |= 1 << h
        for j in watchers.get(h, ()):
            counts[j] -= 1
            if counts[j] == 0:
                queue.append(j)
    return AtomSet(p.n, derived)


def _rule_masks(p: Program) -> list[tuple[int, int, int]]:
    """(head_bit, pos_mask, neg_mask) triples for mask-level semantics."""
    out = []
    for r in p.rules:
        pm = 0
        for b in r.pos_body:
            pm |= 1 << b
        nm = 0
        for c in r.neg_body:
            nm |= 1 << c
        out.append((1 << r.head, pm, nm))
    return out


def _is_answer_set_masks(rule_masks: list[tuple[int, int, int]], smask: int) -> bool:
    """Reduct + least-model check on precomputed masks (hot-loop form)."""
    pending = [(h, pm) for (h, pm, nm) in rule_masks if not (nm & smask)]
    lm = 0
    changed = True
    while changed and pending:
        changed = False
        rest = []
        for h, pm in pending:
            if pm & lm == pm:
                if not (lm & h):
                    lm |= h
                    if lm & ~smask:
                        return False  # least model already exceeds s
                    changed = True
            else:
                rest.append((h, pm))
        pending = rest
    return lm == smask


def is_answer_set_general(p: Program, s: AtomSet) -> bool:
    """Reference check: s is an answer set iff s is the least model of the reduct."""
    _require_same_universe(p.n, s)
    return _is_answer_set_masks(_rule_masks(p), s.mask)
