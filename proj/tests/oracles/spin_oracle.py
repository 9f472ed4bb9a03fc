"""Reference spin parity via Johnson's formula on center-to-center paths.

q(gamma) = turning + 1 + #self-crossings (mod 2); crossings counted by
endpoint interleaving of chords in each square, with random distinct
positions of edge crossings. Arf invariant by symplectic reduction.
"""
import random
import sys
from origami_oracle import parse, inv, comp, cycles

R, U, L, D = 0, 1, 2, 3  # directions; side index = direction of exit


def graph_cycles(r, u):
    d = len(r)
    parent = {0: None}
    order = [0]
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for dirn, y in ((R, r[x]), (U, u[x])):
            if y not in parent:
                parent[y] = (x, dirn)
                order.append(y)
    tree = {(p[0], p[1]) for y, p in parent.items() if p}

    def path_to_root(x):  # moves from root to x
        moves = []
        while parent[x]:
            px, dn = parent[x]
            moves.append((px, dn))
            x = px
        return moves[::-1]

    out = []
    for x in range(d):
        for dirn, y in ((R, r[x]), (U, u[x])):
            if (x, dirn) in tree:
                continue
            # cycle: root->x, x->y, y->root
            fwd = [dn for _, dn in path_to_root(x)] + [dirn]
            back = [(dn + 2) % 4 for _, dn in path_to_root(y)][::-1]
            out.append(reduce_moves(r, u, fwd + back))
    return out


def reduce_moves(r, u, m):
    start = 0
    st = []
    for x in m:
        if st and (st[-1] + 2) % 4 == x:
            st.pop()
        else:
            st.append(x)
    while len(st) >= 2 and (st[0] + 2) % 4 == st[-1]:
        start = (r, u, inv(r), inv(u))[st[0]][start]
        st = st[1:-1]
    return start, st


def walk(r, u, start, moves):
    ri, ui = inv(r), inv(u)
    sq = [start]
    x = start
    for m in moves:
        x = (r, u, ri, ui)[m][x]
        sq.append(x)
    assert x == start
    return sq


def chords(r, u, curves, rng):
    """Return per-curve list of (square, entry_pt, exit_pt) on square boundary circle."""
    # edge id: ('h', i) = right side of i; ('v', i) = top side of i
    pos = {}
    def edge_pos(e):
        while True:
            t = rng.random()
            if (e, t) not in pos:
                pos[(e, t)] = 1
                return t
    out = []
    for start, moves in curves:
        sq = walk(r, u, start, moves)
        n = len(moves)
        cross = []
        for k, m in enumerate(moves):
            x = sq[k]
            if m == R: e = ('h', x)
            elif m == U: e = ('v', x)
            elif m == L: e = ('h', sq[k + 1])
            else: e = ('v', sq[k + 1])
            cross.append(edge_pos(e))
        ch = []
        for k in range(n):
            x = sq[k]
            enter_m = moves[k - 1]
            exit_m = moves[k]
            ent_side = (enter_m + 2) % 4
            ch.append((x, circ(ent_side, cross[k - 1]), circ(exit_m, cross[k])))
        out.append(ch)
    return out


def circ(side, t):
    # position along boundary circle counterclockwise starting bottom-left
    # side R: x=1,y=t ; U: y=1,x=t (ccw goes right->left) ; L: x=0,y=t (top->bottom); D: y=0
    if side == 3: return t
    if side == 0: return 1 + t
    if side == 1: return 2 + (1 - t)
    return 3 + (1 - t)


def interleave(a, b):
    a0, a1 = sorted(a)
    return (a0 < b[0] < a1) != (a0 < b[1] < a1)


def turning(moves):
    s = 0
    n = len(moves)
    for k in range(n):
        dlt = (moves[k] - moves[k - 1]) % 4
        s += {0: 0, 1: 1, 3: -1}[dlt]
    assert s % 4 == 0
    return s // 4


def arf(r, u, rng):
    cyc = graph_cycles(r, u)
    curves = cyc
    cyc = [m for _, m in cyc]
    ch = chords(r, u, curves, rng)
    n = len(cyc)
    def crossings(c1, c2):
        cnt = 0
        for (s1, a0, a1) in c1:
            for (s2, b0, b1) in c2:
                if s1 == s2 and interleave((a0, a1), (b0, b1)):
                    cnt += 1
        return cnt
    B = [[0] * n for _ in range(n)]
    q = [0] * n
    for i in range(n):
        self_c = 0
        ci = ch[i]
        for a in range(len(ci)):
            for b in range(a + 1, len(ci)):
                if ci[a][0] == ci[b][0] and interleave(ci[a][1:], ci[b][1:]):
                    self_c += 1
        q[i] = (turning(cyc[i]) + 1 + self_c) % 2
        for j in range(i + 1, n):
            B[i][j] = B[j][i] = crossings(ch[i], ch[j]) % 2
    # vectors as bitmasks
    vecs = [(1 << i, q[i]) for i in range(n)]
    def bil(x, y):
        s = 0
        for i in range(n):
            if x >> i & 1:
                for j in range(n):
                    if y >> j & 1:
                        s ^= B[i][j]
        return s
    def add(x, y):  # (vec,q)+(vec,q)
        return (x[0] ^ y[0], (x[1] + y[1] + bil(x[0], y[0])) % 2)
    total = 0
    g = 0
    pool = vecs[:]
    while True:
        found = None
        for i in range(len(pool)):
            for j in range(i + 1, len(pool)):
                if bil(pool[i][0], pool[j][0]):
                    found = (i, j)
                    break
            if found: break
        if not found: break
        a, b = pool[found[0]], pool[found[1]]
        total ^= a[1] & b[1]
        g += 1
        rest = []
        for k, z in enumerate(pool):
            if k in found: continue
            if bil(z[0], b[0]): z = add(z, a)
            if bil(z[0], a[0]): z = add(z, b)
            rest.append(z)
        pool = rest
    return g, total


if __name__ == "__main__":
    cases = {
        "fig1": ("(1234)(5)", "(15)", 5),
        "10odd": ("(1 2 3 4 5 6 7 8 9 10 11)", "(1 3 5 7 9 11)", 11),
        "10even": ("(1 2 3 4 5 6 7 8 9 10 11)", "(1 5 7 9 11)(2 4)", 11),
        "44even": ("(1 2 3 4 5 6 7 8 9 10)", "(1 10)(2 9)(3 5 6 8)", 10),
        "44odd": ("(1 2 3 4 5 6 7 8 9 10)", "(1 10)(2 3)(5 6)(7 8)", 10),
    }
    for name, (rs, us, d) in cases.items():
        r, u = parse(rs, d), parse(us, d)
        res = {arf(r, u, random.Random(seed)) for seed in range(6)}
        print(name, res)
