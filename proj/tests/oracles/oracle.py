"""Brute-force reference computations for the frozen regression values.

Everything here works from the raw recursions by acting on words letter by
letter; nothing is shared with the C++ library.
"""
import itertools
import sys
from collections import deque

CATALOG = {
    "trivial": (2, {"e": ((0, 1), ("e", "e"))}, ["e"]),
    "odometer": (2, {"a": ((1, 0), ("e", "a")), "e": ((0, 1), ("e", "e"))}, ["a"]),
    "basilica": (2, {"a": ((1, 0), ("b", "id")), "b": ((0, 1), ("a", "id")), "id": ((0, 1), ("id", "id"))}, ["a", "b"]),
    "aleshin": (2, {"a": ((1, 0), ("b", "c")), "b": ((1, 0), ("c", "b")), "c": ((0, 1), ("a", "a"))}, ["a", "b", "c"]),
    "aut882": (2, {"a": ((1, 0), ("c", "c")), "b": ((0, 1), ("b", "c")), "c": ((0, 1), ("b", "a"))}, ["a", "b", "c"]),
    "aut878": (2, {"a": ((1, 0), ("b", "b")), "b": ((0, 1), ("b", "c")), "c": ((0, 1), ("b", "a"))}, ["a", "b", "c"]),
    "z2": (2, {"a": ((1, 0), ("e", "b")), "b": ((0, 1), ("a", "a")), "e": ((0, 1), ("e", "e"))}, ["a", "b"]),
    "virtually_z3": (2, {"a": ((1, 0), ("b", "b")), "b": ((0, 1), ("c", "a")), "c": ((0, 1), ("a", "a"))}, ["a", "b", "c"]),
    "half_basilica": (2, {"a": ((1, 0), ("b", "b")), "b": ((0, 1), ("c", "b")), "c": ((0, 1), ("c", "a"))}, ["a", "b", "c"]),
    "aut2853": (2, {"a": ((1, 0), ("c", "c")), "b": ((1, 0), ("b", "a")), "c": ((0, 1), ("c", "c"))}, ["a", "b", "c"]),
    "lamplighter": (2, {"a": ((1, 0), ("b", "a")), "b": ((0, 1), ("b", "a"))}, ["a", "b"]),
    "long_range": (2, {"a": ((0, 1), ("a", "b")), "b": ((1, 0), ("b", "e")), "e": ((0, 1), ("e", "e"))}, ["a", "b"]),
    "sierpinski": (3, {"a": ((2, 1, 0), ("e", "a", "e")), "b": ((1, 0, 2), ("e", "e", "b")),
                       "c": ((1, 0, 2), ("c", "e", "e")), "e": ((0, 1, 2), ("e", "e", "e"))}, ["a", "b", "c"]),
    "sierpinski_sigma3": (3, {"a": ((2, 1, 0), ("e", "a", "e")), "b": ((1, 0, 2), ("e", "e", "b")),
                              "c": ((0, 2, 1), ("c", "e", "e")), "e": ((0, 1, 2), ("e", "e", "e"))}, ["a", "b", "c"]),
    "grigorchuk": (2, {"a": ((1, 0), ("e", "e")), "b": ((0, 1), ("a", "c")), "c": ((0, 1), ("a", "d")),
                       "d": ((0, 1), ("e", "b")), "e": ((0, 1), ("e", "e"))}, ["a", "b", "c", "d"]),
    "hanoi": (3, {"a01": ((1, 0, 2), ("e", "e", "a01")), "a02": ((2, 1, 0), ("e", "a02", "e")),
                  "a12": ((0, 2, 1), ("a12", "e", "e")), "e": ((0, 1, 2), ("e", "e", "e"))}, ["a01", "a02", "a12"]),
}


def mother(d, m):
    states, gens = {}, []
    ident = tuple(range(m))
    perms = [p for p in itertools.permutations(range(m)) if p != ident]
    rest = ("e",) * (m - 2)
    for s in perms:
        tag = "".join(map(str, s))
        states["s" + tag] = (s, ("e", "e") + rest)
        gens.append("s" + tag)
        for k in range(d + 1):
            below = "s" + tag if k == 0 else "a%d_%s" % (k - 1, tag)
            states["a%d_%s" % (k, tag)] = (ident, ("a%d_%s" % (k, tag), below) + rest)
            gens.append("a%d_%s" % (k, tag))
    for r in perms:
        if r[0] != 0:
            continue
        tag = "".join(map(str, r))
        for k in range(d + 1):
            name = "b%d_%s" % (k, tag)
            if k == 0:
                states[name] = (r, (name, "e") + rest)
            else:
                states[name] = (ident, (name, "b%d_%s" % (k - 1, tag)) + rest)
            gens.append(name)
    states["e"] = (ident, ("e",) * m)
    return m, states, gens


for d in (1, 2, 3):
    for m in (2, 3):
        CATALOG["mother_%d_%d" % (d, m)] = mother(d, m)


def act(states, q, word):
    out = []
    for x in word:
        perm, secs = states[q]
        out.append(perm[x])
        q = secs[x]
    return tuple(out)


def level_graph(k, states, gens, n):
    words = list(itertools.product(range(k), repeat=n))
    adj = {w: set() for w in words}
    for g in gens:
        for w in words:
            v = act(states, g, w)
            if v != w:
                adj[w].add(v)
                adj[v].add(w)
    return words, adj


def components(k, states, gens, n):
    words, adj = level_graph(k, states, gens, n)
    seen, count = set(), 0
    for w in words:
        if w in seen:
            continue
        count += 1
        seen.add(w)
        queue = deque([w])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return count


def component_size(k, states, gens, n, root):
    _, adj = level_graph(k, states, gens, n)
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen)


# Elements as signed generator words; inverses act through the inverse table.
def inverse_states(k, states):
    inv = {}
    for q, (perm, secs) in states.items():
        pinv = [0] * k
        for x, y in enumerate(perm):
            pinv[y] = x
        inv[q + "'"] = (tuple(pinv), tuple(secs[pinv[y]] + "'" for y in range(k)))
    full = dict(states)
    full.update(inv)
    return full


def word_act(full, word, w):
    for q in reversed(word):
        w = act(full, q, w)
    return w


def word_section(full, word, v):
    secs = []
    for q in reversed(word):
        q_sec = q
        image = []
        for x in v:
            perm, s = full[q_sec]
            image.append(perm[x])
            q_sec = s[x]
        secs.append(q_sec)
        v = tuple(image)
    return tuple(reversed(secs))


def signature(k, full, word, depth):
    return tuple(word_act(full, word, w) for w in itertools.product(range(k), repeat=depth))


def nucleus_size(key, word_length=3, section_depth=None, sig_depth=8):
    """Recurring sections of all words of length <= word_length, elements
    identified by their action on words of length sig_depth."""
    k, states, gens = CATALOG[key]
    full = inverse_states(k, states)
    letters = [g for g in gens] + [g + "'" for g in gens]
    key_of = {}
    succ = {}
    queue = deque()

    def node(word):
        sig = signature(k, full, word, sig_depth)
        if sig not in key_of:
            key_of[sig] = word
            queue.append(sig)
        return sig

    for length in range(1, word_length + 1):
        for word in itertools.product(letters, repeat=length):
            node(word)
    while queue:
        sig = queue.popleft()
        word = key_of[sig]
        succ[sig] = [node(word_section(full, word, (x,))) for x in range(k)]
    # recurring = reachable from a node lying on a cycle
    nodes = list(succ)
    def reach(s):
        seen, stack = set(), [s]
        while stack:
            u = stack.pop()
            for v in succ[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen
    on_cycle = [s for s in nodes if s in reach(s)]
    recurring = set()
    for s in on_cycle:
        recurring |= reach(s) | {s}
    return len(recurring)


def main():
    print("components")
    for key in ["long_range", "trivial", "lamplighter", "aut2853", "half_basilica", "grigorchuk", "sierpinski"]:
        k, s, g = CATALOG[key]
        top = 10 if k == 2 else 6
        print(" ", key, [components(k, s, g, n) for n in range(1, top + 1)])
    for key in [x for x in CATALOG if x.startswith("mother")]:
        k, s, g = CATALOG[key]
        top = 8 if k == 2 else 5
        print(" ", key, [components(k, s, g, n) for n in range(1, top + 1)])
    print("connected through 12 (binary) / 7 (ternary)")
    for key in ["basilica", "aleshin", "z2", "aut878", "aut882", "virtually_z3", "odometer", "grigorchuk",
                "half_basilica", "aut2853", "sierpinski_sigma3", "hanoi"]:
        k, s, g = CATALOG[key]
        top = 12 if k == 2 else 7
        print(" ", key, all(components(k, s, g, n) == 1 for n in range(1, top + 1)))
    print("long_range pointed sizes at 0^w")
    k, s, g = CATALOG["long_range"]
    print(" ", {n: component_size(k, s, g, n, (0,) * n) for n in (4, 6, 8)})
    print("nucleus sizes (recurring sections of short words)")
    for key in ["trivial", "odometer", "basilica", "z2", "aut878", "half_basilica", "grigorchuk", "hanoi",
                "sierpinski", "sierpinski_sigma3", "aut2853"]:
        print(" ", key, nucleus_size(key, 3, None, 8 if CATALOG[key][0] == 2 else 5))
    # word length 3 is not enough here; the count is 10, 20, 34, 41, 41 for lengths 2..6
    print(" ", "virtually_z3", nucleus_size("virtually_z3", 5, None, 8))


if __name__ == "__main__":
    main()
