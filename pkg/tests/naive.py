"""Textbook-definition checks on plain lists, sharing no code with the package."""


def fib(i):
    a, b = 1, 1
    for _ in range(i - 1):
        a, b = b, a + b
    return a


def zww_by_phi(k):
    w = [0]
    for _ in range(k):
        out = []
        for c in w:
            out += [c, c + 1] if c % 2 == 0 else [c + 1]
        w = out
    return w


def factors(w):
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            yield i, tuple(w[i:j])


def palindromes(w):
    occ = [(i + 1, len(f)) for i, f in factors(w) if f == f[::-1]]
    distinct = {f for _, f in factors(w) if f == f[::-1]}
    return occ, distinct


def squares(w):
    occ = []
    distinct = set()
    for i, f in factors(w):
        h = len(f) // 2
        if len(f) % 2 == 0 and f[:h] == f[h:]:
            occ.append((i + 1, h))
            distinct.add(f)
    return sorted(occ), distinct


def least_period(f):
    n = len(f)
    return next(p for p in range(1, n + 1) if all(f[i] == f[i + p] for i in range(n - p)))


def runs(w):
    n = len(w)
    out = []
    for i, f in factors(w):
        p = least_period(f)
        if len(f) < 2 * p:
            continue
        j = i + len(f)
        left = i > 0 and w[i - 1] == w[i - 1 + p]
        right = j < n and w[j] == w[j - p]
        if not left and not right:
            out.append((i + 1, len(f), p))
    return sorted(out)


def is_lyndon(f):
    # strictly smaller than every nontrivial rotation
    f = list(f)
    return all(f < f[r:] + f[:r] for r in range(1, len(f)))


def lyndon_array(w):
    n = len(w)
    return [i + max(L for L in range(1, n - i + 1) if is_lyndon(w[i : i + L])) for i in range(n)]


def lyndon_by_letter(w):
    found = {f for _, f in factors(w) if is_lyndon(f)}
    out = {}
    for f in found:
        out[f[0]] = out.get(f[0], 0) + 1
    return {c: out.get(c, 0) for c in sorted(set(w))}
