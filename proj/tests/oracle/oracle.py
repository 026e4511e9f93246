"""Brute-force reference semantics, used to freeze the expected values of the corpus.

Shares no code with the C++ library. Everything is exhaustive: answer sets over all
consistent literal sets, B-preferredness over all full prioritizations, pvd over all pairs of
total orders.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Rule:
    label: str
    head: tuple
    pos: tuple
    neg: tuple


@dataclass
class Prog:
    rules: list
    prefers: list = field(default_factory=list)
    weak: list = field(default_factory=list)  # (pos, neg, weight, level)


def _lits(text):
    return tuple(t.strip() for t in text.split(",") if t.strip())


def _body(text):
    pos, neg = [], []
    for t in _lits(text):
        if t.startswith("not "):
            neg.append(t[4:].strip())
        else:
            pos.append(t)
    return tuple(pos), tuple(neg)


def parse(text):
    """Small parser for the corpus subset: labels, `a < b.`, `v` heads, `:~ ... [w:l]`."""
    text = re.sub(r"%[^\n]*", "", text)
    prog = Prog([])

    def weak(m):
        pos, neg = _body(m.group(1))
        prog.weak.append((pos, neg, int(m.group(2) or 1), int(m.group(3) or 1)))
        return " "

    text = re.sub(r":~([^.]*)\.\s*(?:\[\s*(\d+)\s*(?::\s*(\d+))?\s*\])?", weak, text)
    stmts = [s.strip() for s in text.split(".") if s.strip()]
    prefs = [re.fullmatch(r"(\w+)\s*<\s*(\w+)", s) for s in stmts]
    width = max(3, len(str(sum(1 for m in prefs if not m))))
    for s, m in zip(stmts, prefs):
        if m:
            prog.prefers.append((m.group(1), m.group(2)))
            continue
        m = re.match(r"([a-z]\w*)\s*:(?!-)\s*(.*)", s, re.S)
        label = None
        if m:
            label, s = m.group(1), m.group(2)
        head, _, body = s.partition(":-")
        heads = tuple(h.strip() for h in re.split(r"\s+v\s+", head.strip()) if h.strip())
        pos, neg = _body(body)
        idx = len(prog.rules) + 1
        prog.rules.append(Rule(label or f"r{idx:0{width}d}", heads, pos, neg))
    return prog


def rewrite_constraints(prog):
    """Prioritized input convention: `:- C.` becomes `bad_k :- C, not bad_k.`"""
    used = set(atoms(prog))
    rules, k = [], 0
    for r in prog.rules:
        if r.head:
            rules.append(r)
            continue
        k += 1
        while f"bad_{k}" in used:
            k += 1
        bad = f"bad_{k}"
        used.add(bad)
        rules.append(Rule(r.label, (bad,), r.pos, r.neg + (bad,)))
    return Prog(rules, prog.prefers, prog.weak)


def compl(l):
    return l[1:] if l.startswith("-") else "-" + l


def atoms(prog):
    out = set()
    for r in prog.rules:
        for l in r.head + r.pos + r.neg:
            out.add(l.lstrip("-"))
    for pos, neg, _, _ in prog.weak:
        for l in pos + neg:
            out.add(l.lstrip("-"))
    return sorted(out)


def consistent(s):
    return not any(compl(l) in s for l in s)


def candidates(prog):
    """All consistent sets of literals over the atoms of prog."""
    ats = atoms(prog)
    for choice in itertools.product((None, True, False), repeat=len(ats)):
        yield frozenset(a if c else "-" + a for a, c in zip(ats, choice) if c is not None)


def reduct(rules, interp):
    return [(r.head, r.pos) for r in rules if not set(r.neg) & interp]


def closed(s, red):
    return all(set(h) & s for h, pos in red if set(pos) <= s)


def is_answer_set(rules, interp):
    if not consistent(interp):
        return False
    red = reduct(rules, interp)
    if not closed(interp, red):
        return False
    items = sorted(interp)
    for k in range(len(items)):
        for sub in itertools.combinations(items, k):
            if closed(set(sub), red):
                return False
    return True


def answer_sets(prog):
    return sorted((s for s in candidates(prog) if is_answer_set(prog.rules, s)), key=sorted)


def violated(w, s):
    pos, neg, _, _ = w
    return set(pos) <= s and not set(neg) & s


def objective(prog, s):
    wc = prog.weak
    if not wc:
        return 0
    wmax = max(w[2] for w in wc)
    lmax = max(w[3] for w in wc)
    f = {1: 1}
    for i in range(2, lmax + 1):
        f[i] = f[i - 1] * len(wc) * wmax + 1
    return sum(f[w[3]] * w[2] for w in wc if violated(w, s))


def optimal(prog):
    sets = answer_sets(prog)
    if not sets:
        return [], None
    best = min(objective(prog, s) for s in sets)
    return [s for s in sets if objective(prog, s) == best], best


def closure(pairs):
    rel = set(pairs)
    while True:
        extra = {(a, d) for a, b in rel for c, d in rel if b == c} - rel
        if not extra:
            return rel
        rel |= extra


def extensions(prog):
    labels = [r.label for r in prog.rules]
    rel = closure(prog.prefers)
    for perm in itertools.permutations(labels):
        pos = {l: i for i, l in enumerate(perm)}
        if all(pos[a] < pos[b] for a, b in rel):
            yield perm


def c_b(prog, seq, s):
    """C_B of the dual reduct of (P, seq) w.r.t. s."""
    by_label = {r.label: r for r in prog.rules}
    red, seen = [], set()
    for l in seq:
        r = by_label[l]
        if set(r.pos) <= s:
            key = (r.head, r.neg)
            if key not in seen:
                seen.add(key)
                red.append(r)
    cur = set()
    for r in red:
        alpha = bool(cur & set(r.neg))
        beta = set(r.head) <= s and bool(s & set(r.neg))
        if not (alpha or beta):
            cur |= set(r.head)
    return frozenset(cur) if consistent(cur) else None


def b_preferred_under(prog, seq, a):
    return c_b(prog, seq, a) == a


def b_preferred(prog):
    return [a for a in answer_sets(prog) if any(b_preferred_under(prog, seq, a) for seq in extensions(prog))]


def staged(prog, s, d_semantics):
    rel = closure(prog.prefers)
    active = lambda r, x, y: set(r.pos) <= x and not set(r.neg) & y
    cur, used = set(), set()
    for _ in prog.rules:
        add, fired = set(), set()
        for r in prog.rules:
            if not active(r, cur, s):
                continue
            blocked = False
            for r2 in prog.rules:
                if (r2.label, r.label) not in rel or not active(r2, s, cur):
                    continue
                if (r2.label not in used) if d_semantics else (r2.head[0] not in cur):
                    blocked = True
                    break
            if not blocked:
                add |= set(r.head)
                fired.add(r.label)
        cur |= add
        used |= fired
    return frozenset(cur) if consistent(cur) else None


def w_preferred(prog):
    return [a for a in answer_sets(prog) if staged(prog, a, False) == a]


def d_preferred(prog):
    return [a for a in answer_sets(prog) if staged(prog, a, True) == a]


def distance(s1, s2):
    pos = {x: i for i, x in enumerate(s2)}
    return sum(1 for i, j in itertools.combinations(range(len(s1)), 2) if pos[s1[i]] > pos[s1[j]])


def pvd(prog, a):
    labels = [r.label for r in prog.rules]
    targets = [seq for seq in itertools.permutations(labels) if b_preferred_under(prog, seq, a)]
    return min(distance(e, t) for e in extensions(prog) for t in targets)


def weakly_preferred(prog):
    sets = answer_sets(prog)
    if not sets:
        return [], {}
    values = {s: pvd(prog, s) for s in sets}
    best = min(values.values())
    return [s for s in sets if values[s] == best], values
