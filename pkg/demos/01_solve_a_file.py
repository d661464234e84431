"""Parse a small PGSolver game, run ps1 on it and print the winners.

The file uses max-parity colours, the PGSolver convention; it is
converted to min-parity before solving.
"""

from pgpartial import initial_state, named_pipeline, parse_pgsolver, zielonka
from pgpartial.io import emit_solution
from pgpartial.state import WinningRegions

TEXT = """parity 3;
0 3 0 1,2 "start";
1 2 1 0,3;
2 1 1 2;
3 0 0 1;
"""

doc = parse_pgsolver(TEXT)
g = doc.min_parity_game()
print(f"{g.n} nodes, {g.num_edges} edges, min-parity colours {g.color}")

s = named_pipeline("ps1")(initial_state(g))
print(emit_solution(WinningRegions(s.w0, s.w1), doc.source_names, doc.source_ids))

# a partial solver is never wrong about what it decides
truth = zielonka(g)
assert s.w0 <= truth.w0 and s.w1 <= truth.w1
print("left undecided:", sorted(set(range(g.n)) - s.w0 - s.w1))
