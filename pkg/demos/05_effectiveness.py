"""How often does each refinement change a state that while(fa) cannot touch?"""

from pgpartial import ER_FA, ER_SD, ER_SD_OWNED, M_SCC, M_SS, RandomConfig, effectiveness_compare

n = 300
rep = effectiveness_compare([ER_FA, ER_SD, ER_SD_OWNED, M_SS, M_SCC], RandomConfig.parse("60-30-2-3"), n, seed=0)
print(f"{n} fatal-attractor-free states drawn from {rep.games_run} games")
for name, k in sorted(rep.simplification_counts.items(), key=lambda kv: -kv[1]):
    print(f"  {name:12s} {100 * k / n:5.1f}%")
