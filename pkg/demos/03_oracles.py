"""Cross-check the two complete solvers on random small games."""

from pgpartial import RandomConfig, brute_force, gen_random, zielonka

agree = 0
for i in range(500):
    n = 1 + i % 8
    g = gen_random(RandomConfig(n, 5, 1, min(3, n), self_loops=True), i)
    z, b = zielonka(g), brute_force(g)
    assert z == b, (i, g)
    agree += 1
print(f"zielonka and brute force agree on {agree} games")
