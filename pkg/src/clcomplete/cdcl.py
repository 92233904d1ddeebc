"""A conflict-driven clause-learning SAT solver in pure Python.

Literals are kept internally as indices ``2*v`` (positive) and ``2*v+1``
(negative). Features: two watched literals with separate binary implication
lists, first-UIP learning with local minimisation, VSIDS branching over a
lazy heap, phase saving, Luby restarts and LBD-based learnt-clause
reduction. Clauses may be added between calls to `solve`, which makes the
solver usable for blocking-clause enumeration.
"""

from __future__ import annotations

import heapq
import random
import time
from dataclasses import dataclass, field

SAT, UNSAT, UNKNOWN = "SAT", "UNSAT", "UNKNOWN"


def _luby(i: int) -> int:
    """i-th element (1-based) of the Luby sequence 1,1,2,1,1,2,4,..."""
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while True:
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1


@dataclass
class Stats:
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0
    restarts: int = 0
    learnt: int = 0
    reductions: int = 0
    solve_time: float = 0.0


class CDCLSolver:
    def __init__(self, num_vars: int = 0, seed: int = 0):
        self.nvars = 0
        self.val: list[int] = [0, 0]  # per literal index: 1 true, -1 false, 0 open
        self.level: list[int] = [0]
        self.reason: list = [None]
        self.activity: list[float] = [0.0]
        self.polarity: list[int] = [1]  # 1: prefer negative literal
        self.seen: list[bool] = [False]
        self.watches: list[list] = [[], []]
        self.bins: list[list[int]] = [[], []]
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.clauses: list[list[int]] = []
        self.learnts: list[list[int]] = []
        self.lbd: dict[int, int] = {}
        self.heap: list[tuple[float, int]] = []
        self.var_inc = 1.0
        self.var_decay = 0.95
        self.ok = True
        self.rng = random.Random(seed)
        self.stats = Stats()
        self.max_learnts = 4000.0
        self.ensure_vars(num_vars)

    # -- setup ---------------------------------------------------------------

    def ensure_vars(self, n: int) -> None:
        while self.nvars < n:
            self.nvars += 1
            self.val += [0, 0]
            self.level.append(0)
            self.reason.append(None)
            # tiny seeded noise decides ties between untouched variables
            self.activity.append(self.rng.random() * 1e-6)
            self.polarity.append(1)
            self.seen.append(False)
            self.watches += [[], []]
            self.bins += [[], []]
            heapq.heappush(self.heap, (-self.activity[-1], self.nvars))

    @staticmethod
    def _idx(lit: int) -> int:
        return 2 * lit if lit > 0 else -2 * lit + 1

    def add_clause(self, lits) -> bool:
        """Add a clause of DIMACS literals; returns False once the formula is UNSAT."""
        if not self.ok:
            return False
        if self.trail_lim:
            self._backtrack(0)
        idx = set()
        for l in lits:
            if l == 0:
                raise ValueError("literal 0 in clause")
            self.ensure_vars(abs(l))
            idx.add(self._idx(l))
        clause = []
        for li in idx:
            if li ^ 1 in idx or self.val[li] == 1:
                return True  # tautology or satisfied at level 0
            if self.val[li] == 0:
                clause.append(li)
        if not clause:
            self.ok = False
            return False
        if len(clause) == 1:
            self._assign(clause[0], None)
            if self._propagate() is not None:
                self.ok = False
            return self.ok
        self._attach(clause)
        self.clauses.append(clause)
        return True

    def _attach(self, c: list[int]) -> None:
        if len(c) == 2:
            self.bins[c[0]].append(c[1])
            self.bins[c[1]].append(c[0])
        else:
            self.watches[c[0]].append(c)
            self.watches[c[1]].append(c)

    # -- core ------------------------------------------------------------------

    def _assign(self, li: int, reason) -> None:
        v = li >> 1
        self.val[li] = 1
        self.val[li ^ 1] = -1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(li)

    def _propagate(self):
        """Unit propagation; returns a conflicting clause (list of literal indices) or None.

        Watch lists are indexed by the literal that has become false.
        """
        val, trail, level, reason = self.val, self.trail, self.level, self.reason
        watches, bins = self.watches, self.bins
        dl = len(self.trail_lim)
        props = 0
        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            props += 1
            fl = p ^ 1
            for q in bins[fl]:
                vq = val[q]
                if vq == 1:
                    continue
                if vq == -1:
                    self.qhead = len(trail)
                    self.stats.propagations += props
                    return [q, fl]
                val[q] = 1
                val[q ^ 1] = -1
                level[q >> 1] = dl
                reason[q >> 1] = [q, fl]
                trail.append(q)
            ws = watches[fl]
            i = j = 0
            n = len(ws)
            while i < n:
                c = ws[i]
                i += 1
                if c[0] == fl:
                    c[0] = c[1]
                    c[1] = fl
                first = c[0]
                if val[first] == 1:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    if val[lk] != -1:
                        c[1] = lk
                        c[k] = fl
                        watches[lk].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if val[first] == -1:
                        while i < n:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        del ws[j:]
                        self.qhead = len(trail)
                        self.stats.propagations += props
                        return c
                    val[first] = 1
                    val[first ^ 1] = -1
                    level[first >> 1] = dl
                    reason[first >> 1] = c
                    trail.append(first)
            del ws[j:]
        self.stats.propagations += props
        return None

    def _bump(self, v: int) -> None:
        act = self.activity
        act[v] += self.var_inc
        if act[v] > 1e100:
            for u in range(1, self.nvars + 1):
                act[u] *= 1e-100
            self.var_inc *= 1e-100
            self._rebuild_heap()
        elif self.val[2 * v] == 0:
            heapq.heappush(self.heap, (-act[v], v))

    def _rebuild_heap(self) -> None:
        self.heap = [(-self.activity[v], v) for v in range(1, self.nvars + 1) if self.val[2 * v] == 0]
        heapq.heapify(self.heap)

    def _analyze(self, confl):
        seen, level, reason, trail = self.seen, self.level, self.reason, self.trail
        dl = len(self.trail_lim)
        learnt = [0]
        counter = 0
        p = -1
        idx = len(trail) - 1
        to_clear = []
        while True:
            start = 0 if p < 0 else 1
            for k in range(start, len(confl)):
                q = confl[k]
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = True
                    to_clear.append(v)
                    self._bump(v)
                    if level[v] >= dl:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            v = p >> 1
            confl = reason[v]
            seen[v] = False
            counter -= 1
            if counter == 0:
                break
        learnt[0] = p ^ 1
        # local minimisation: drop literals implied by other literals of the clause
        keep = [learnt[0]]
        for q in learnt[1:]:
            r = reason[q >> 1]
            if r is None:
                keep.append(q)
                continue
            for k in range(1, len(r)):
                u = r[k] >> 1
                if not seen[u] and level[u] > 0:
                    keep.append(q)
                    break
        for v in to_clear:
            seen[v] = False
        learnt = keep
        if len(learnt) == 1:
            bt = 0
        else:
            best = 1
            for k in range(2, len(learnt)):
                if level[learnt[k] >> 1] > level[learnt[best] >> 1]:
                    best = k
            learnt[1], learnt[best] = learnt[best], learnt[1]
            bt = level[learnt[1] >> 1]
        lbd = len({level[q >> 1] for q in learnt})
        return learnt, bt, lbd

    def _backtrack(self, lvl: int) -> None:
        if len(self.trail_lim) <= lvl:
            return
        val, polarity, trail = self.val, self.polarity, self.trail
        stop = self.trail_lim[lvl]
        act, heap = self.activity, self.heap
        for k in range(len(trail) - 1, stop - 1, -1):
            li = trail[k]
            v = li >> 1
            val[li] = 0
            val[li ^ 1] = 0
            polarity[v] = li & 1
            self.reason[v] = None
            heapq.heappush(heap, (-act[v], v))
        del trail[stop:]
        del self.trail_lim[lvl:]
        self.qhead = len(trail)
        if len(heap) > 6 * self.nvars + 1000:
            self._rebuild_heap()

    def _decide(self) -> int:
        heap, val = self.heap, self.val
        while heap:
            _, v = heapq.heappop(heap)
            if val[2 * v] == 0:
                return 2 * v + self.polarity[v]
        return -1

    def _locked(self, c) -> bool:
        v = c[0] >> 1
        return self.val[c[0]] == 1 and self.reason[v] is c

    def _reduce_db(self) -> None:
        self.stats.reductions += 1
        lbd = self.lbd
        cands = sorted(self.learnts, key=lambda c: lbd.get(id(c), 99), reverse=True)
        half = len(cands) // 2
        removed = set()
        for c in cands[:half]:
            if lbd.get(id(c), 99) <= 2 or self._locked(c):
                continue
            removed.add(id(c))
        if not removed:
            return
        self.learnts = [c for c in self.learnts if id(c) not in removed]
        for key in removed:
            lbd.pop(key, None)
        for li in range(len(self.watches)):
            ws = self.watches[li]
            if ws:
                self.watches[li] = [c for c in ws if id(c) not in removed]

    # -- search ----------------------------------------------------------------

    def solve(self, budget: float | None = None, deadline: float | None = None):
        """Return SAT, UNSAT or UNKNOWN (budget exhausted)."""
        t0 = time.monotonic()
        if deadline is None and budget is not None:
            deadline = t0 + budget
        try:
            return self._search(deadline)
        finally:
            self.stats.solve_time += time.monotonic() - t0

    def _search(self, deadline):
        if not self.ok:
            return UNSAT
        self._backtrack(0)
        if self._propagate() is not None:
            self.ok = False
            return UNSAT
        restart_no = 1
        conflicts_left = 100 * _luby(restart_no)
        stats = self.stats
        tick = 0
        while True:
            confl = self._propagate()
            if confl is not None:
                stats.conflicts += 1
                conflicts_left -= 1
                if not self.trail_lim:
                    self.ok = False
                    return UNSAT
                learnt, bt, lbd = self._analyze(confl)
                self._backtrack(bt)
                if len(learnt) == 1:
                    self._assign(learnt[0], None)
                else:
                    if len(learnt) == 2:
                        self.bins[learnt[0]].append(learnt[1])
                        self.bins[learnt[1]].append(learnt[0])
                        self.clauses.append(learnt)
                    else:
                        self.watches[learnt[0]].append(learnt)
                        self.watches[learnt[1]].append(learnt)
                        self.learnts.append(learnt)
                        self.lbd[id(learnt)] = lbd
                    self._assign(learnt[0], learnt)
                    stats.learnt += 1
                self.var_inc /= self.var_decay
                if deadline is not None and stats.conflicts % 64 == 0 and time.monotonic() > deadline:
                    self._backtrack(0)
                    return UNKNOWN
                continue
            if conflicts_left <= 0:
                stats.restarts += 1
                restart_no += 1
                conflicts_left = 100 * _luby(restart_no)
                self._backtrack(0)
                if len(self.learnts) > self.max_learnts + len(self.trail):
                    self._reduce_db()
                    self.max_learnts *= 1.1
                continue
            tick += 1
            if deadline is not None and tick % 512 == 0 and time.monotonic() > deadline:
                self._backtrack(0)
                return UNKNOWN
            li = self._decide()
            if li < 0:
                return SAT
            stats.decisions += 1
            self.trail_lim.append(len(self.trail))
            self._assign(li, None)

    def model(self) -> list[bool]:
        """Assignment after SAT: ``model()[v]`` for v in 1..nvars (index 0 unused)."""
        return [False] + [self.val[2 * v] == 1 for v in range(1, self.nvars + 1)]

    def true_literals(self) -> set[int]:
        return {v if self.val[2 * v] == 1 else -v for v in range(1, self.nvars + 1)}
