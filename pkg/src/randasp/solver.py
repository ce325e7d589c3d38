"""Exact answer-set checking and enumeration for negative two-literal programs.

For a program whose every rule is `a <- not b`, a set S is an answer set
exactly when

  1. no rule has head and body atom both outside S (head = body is allowed,
     so a contradiction rule `a <- not a` forbids a from being outside S), and
  2. every atom of S has a supporting rule `a <- not b` with b outside S.

Equivalently, the complement T = universe \\ S is a kernel of the rule
digraph.  `is_answer_set_n2` checks the two conditions directly;
`enumerate_answer_sets` is a DPLL-style backtracker over IN(S)/OUT(T) atom
assignments with unit propagation; `enumerate_brute_force` scans all 2^n
subsets with the reduct-based reference checker and is the testing oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .programs import AtomSet, Program, _is_answer_set_masks, _rule_masks

BRUTE_FORCE_CAP_DEFAULT = 20

_UNASSIGNED, _IN, _OUT = 0, 1, 2


@dataclass(frozen=True)
class AnswerSetCollection:
    """Enumeration result: verified answer sets in canonical (bitmask) order."""

    sets: tuple[AtomSet, ...]
    count: int
    size_histogram: dict[int, int]
    truncated: bool = False

    def masks(self) -> tuple[int, ...]:
        return tuple(s.mask for s in self.sets)


def _collect(n: int, masks: list[int], truncated: bool) -> AnswerSetCollection:
    masks = sorted(masks)
    hist: dict[int, int] = {}
    for m in masks:
        k = m.bit_count()
        hist[k] = hist.get(k, 0) + 1
    return AnswerSetCollection(
        sets=tuple(AtomSet(n, m) for m in masks),
        count=len(masks),
        size_histogram=hist,
        truncated=truncated,
    )


def _require_n2_nonempty(p: Program) -> None:
    if not p.rules:
        raise ValueError("program must contain at least one rule")
    if not p.is_n2:
        raise ValueError("program is not negative two-literal")


def _n2_pairs(p: Program) -> list[tuple[int, int]]:
    return [(r.head, r.neg_body[0]) for r in p.rules]


def is_answer_set_n2(p: Program, s: AtomSet) -> bool:
    """Structural check of the two answer-set conditions (single rule pass)."""
    _require_n2_nonempty(p)
    if s.n != p.n:
        raise ValueError(f"universe-size mismatch: program n={p.n}, set n={s.n}")
    smask = s.mask
    supported = 0
    for head, body in _n2_pairs(p):
        if not (smask >> body) & 1:  # body atom outside S: rule fires
            if not (smask >> head) & 1:
                return False  # condition 1: head would be outside S too
            supported |= 1 << head
    return smask & ~supported == 0  # condition 2: everything in S is supported


class _Searcher:
    """Backtracking enumeration over IN/OUT atom assignments.

    Propagation rules (sound and conflict-complete for the two conditions):
      OUT(x)  forces IN(y) for every rule neighbor y of x (condition 1) and
              registers x as a supporter of every head it feeds;
      IN(a)   consumes a as a support candidate elsewhere; an IN atom whose
              candidates are exhausted is a conflict, with one candidate left
              that candidate is forced OUT, and an unassigned atom that can
              no longer be supported is forced OUT.
    Leaves are re-verified with is_answer_set_n2 before being reported.
    Single-use: one search per instance.
    """

    def __init__(self, p: Program):
        self.p = p
        n = p.n
        self.heads_of: list[list[int]] = [[] for _ in range(n)]  # body atom -> heads
        self.bodies_of: list[list[int]] = [[] for _ in range(n)]  # head -> body atoms
        for head, body in _n2_pairs(p):
            self.heads_of[body].append(head)
            self.bodies_of[head].append(body)
        deg = [len(self.heads_of[x]) + len(self.bodies_of[x]) for x in range(n)]
        self.order = sorted(range(n), key=lambda x: (-deg[x], x))
        self.state = [_UNASSIGNED] * n
        self.n_out_supp = [0] * n  # support candidates currently OUT
        self.n_free_supp = [len(self.bodies_of[a]) for a in range(n)]  # unassigned candidates
        self.trail: list[int] = []
        self.truncated = False

    # -- propagation ----------------------------------------------------------

    def _enqueue(self, queue, val, atom) -> bool:
        st = self.state[atom]
        if st == _UNASSIGNED:
            queue.append((val, atom))
            return True
        return st == val  # opposite forced value means conflict

    def _check_support(self, queue, y) -> bool:
        if self.n_out_supp[y] > 0:
            return True
        st = self.state[y]
        free = self.n_free_supp[y]
        if st == _IN:
            if free == 0:
                return False
            if free == 1:
                for b in self.bodies_of[y]:
                    if self.state[b] == _UNASSIGNED:
                        return self._enqueue(queue, _OUT, b)
        elif st == _UNASSIGNED and free == 0:
            return self._enqueue(queue, _OUT, y)  # y can never be supported
        return True

    def _apply(self, queue, val, atom) -> bool:
        st = self.state[atom]
        if st != _UNASSIGNED:
            return st == val
        self.state[atom] = val
        self.trail.append(atom)
        heads = self.heads_of[atom]
        # Counter updates run to completion before any conflict can bail out,
        # so _undo_to can reverse them without knowing where a conflict arose.
        if val == _OUT:
            for a in heads:
                self.n_out_supp[a] += 1
                self.n_free_supp[a] -= 1
            for a in heads:
                if self.state[a] == _OUT or not self._enqueue(queue, _IN, a):
                    return False
            for b in self.bodies_of[atom]:
                if self.state[b] == _OUT or not self._enqueue(queue, _IN, b):
                    return False
        else:
            for h in heads:
                self.n_free_supp[h] -= 1
            for h in heads:
                if not self._check_support(queue, h):
                    return False
            if not self._check_support(queue, atom):
                return False
        return True

    def _propagate(self, queue) -> bool:
        while queue:
            val, atom = queue.pop()
            if not self._apply(queue, val, atom):
                return False
        return True

    def _undo_to(self, mark: int) -> None:
        while len(self.trail) > mark:
            atom = self.trail.pop()
            if self.state[atom] == _OUT:
                for a in self.heads_of[atom]:
                    self.n_out_supp[a] -= 1
                    self.n_free_supp[a] += 1
            else:
                for h in self.heads_of[atom]:
                    self.n_free_supp[h] += 1
            self.state[atom] = _UNASSIGNED

    # -- search ----------------------------------------------------------------

    def run(self, limit: int | None):
        """Yield answer-set masks (unordered); set `truncated` if limit hit."""
        queue: list[tuple[int, int]] = []
        for x in range(self.p.n):
            if self.n_free_supp[x] == 0:
                queue.append((_OUT, x))  # heads no rule: can never be in S
        for head, body in _n2_pairs(self.p):
            if head == body:
                queue.append((_IN, head))  # self-loop head can never be out
        if not self._propagate(queue):
            return
        found = 0
        state = self.state
        order = self.order
        n_atoms = len(order)
        values = (_OUT, _IN)
        # Frames (pos, vi, mark): decision resumes at order position pos,
        # vi = next value index to try, mark = trail length on arrival.
        stack = [(0, 0, len(self.trail))]
        while stack:
            pos, vi, mark = stack.pop()
            if vi > 0:
                self._undo_to(mark)  # retract the previous value's subtree
            if vi == 2:
                continue
            while pos < n_atoms and state[order[pos]] != _UNASSIGNED:
                pos += 1
            if pos == n_atoms:
                smask = 0
                for a in range(self.p.n):
                    if state[a] == _IN:
                        smask |= 1 << a
                if is_answer_set_n2(self.p, AtomSet(self.p.n, smask)):
                    yield smask
                    found += 1
                    if limit is not None and found >= limit:
                        self.truncated = True
                        return
                continue
            stack.append((pos, vi + 1, mark))
            queue.clear()
            queue.append((values[vi], order[pos]))
            if self._propagate(queue):
                stack.append((pos + 1, 0, len(self.trail)))


def enumerate_answer_sets(p: Program, limit: int | None = None) -> AnswerSetCollection:
    """All answer sets of a negative two-literal program (at most `limit` if given)."""
    _require_n2_nonempty(p)
    if limit is not None and limit < 1:
        raise ValueError("limit must be positive")
    searcher = _Searcher(p)
    masks = list(searcher.run(limit))
    return _collect(p.n, masks, searcher.truncated)


def count_answer_sets(p: Program) -> int:
    """Number of answer sets, without materializing the collection."""
    _require_n2_nonempty(p)
    return sum(1 for _ in _Searcher(p).run(None))


def enumerate_brute_force(p: Program, cap: int = BRUTE_FORCE_CAP_DEFAULT) -> AnswerSetCollection:
    """Scan all 2^n subsets with the reduct-based reference checker.

    Authoritative oracle for tests.  Negative programs (no positive body
    atoms anywhere, which includes every n2 program) go through a vectorized
    path: the reduct of a negative program is a set of facts, so its least
    model is the union of surviving rule heads, computed for every subset at
    once.  Programs with positive body atoms fall back to the per-subset
    reference checker.
    """
    if not p.rules:
        raise ValueError("program must contain at least one rule")
    if p.n > cap:
        raise ValueError(f"universe size {p.n} exceeds brute-force cap {cap}")
    total = 1 << p.n
    if p.is_negative:
        masks = np.arange(total, dtype=np.uint64)
        lm = np.zeros(total, dtype=np.uint64)
        for r in p.rules:
            neg = np.uint64(sum(1 << c for c in r.neg_body))
            lm[(masks & neg) == np.uint64(0)] |= np.uint64(1 << r.head)
        hits = [int(m) for m in masks[lm == masks]]
    else:
        rm = _rule_masks(p)
        hits = [s for s in range(total) if _is_answer_set_masks(rm, s)]
    return _collect(p.n, hits, truncated=False)
