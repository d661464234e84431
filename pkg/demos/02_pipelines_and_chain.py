"""Run the five pipelines on one random game and watch them refine each other.

Each pipeline adds stages to the previous one, so its decided sets can
only grow and its residual game can only shrink.
"""

from pgpartial import RandomConfig, chain_states, gen_random, initial_state, named_pipeline, rank

cfg = RandomConfig.parse("50-25-2-3")
names = ["ps1", "ps2", "ps3", "ps4", "ps5"]
pls = [named_pipeline(n) for n in names]

# find a game that ps1 leaves unsolved so the chain has something to do
for seed in range(5000):
    g = gen_random(cfg, seed)
    if pls[0](initial_state(g)).g_prime.n:
        break
print(f"seed {seed}: ps1 leaves a residual game")

for name, s in zip(names, chain_states(pls, initial_state(g))):
    print(f"{name}: |W0|={len(s.w0):2d} |W1|={len(s.w1):2d} residual nodes={s.g_prime.n:2d} rank={rank(s.g_prime)}")

lifted = named_pipeline("lift-ps5")(initial_state(g))
print("lift(ps5) residual nodes:", lifted.g_prime.n)
