"""How the scheme finds a quick answer when two large subsets share a bin."""

from ssratio import BinGrid, Epsilon, Instance, collision_solution, enumerate_large_subsets, split_large_small
from ssratio.binning import Collision

inst = Instance((3, 40, 52, 61, 75, 88, 97, 100))
eps = Epsilon(1, 2)

split = split_large_small(inst, eps)
print("small:", inst.values(split.small), " large:", inst.values(split.large))

grid = BinGrid.for_instance(inst, eps)
print(f"bin width {grid.width_num}/{grid.width_den}, {grid.bin_count} bins")

out = enumerate_large_subsets(inst, split.large, grid)
if isinstance(out, Collision):
    a, b = out.first, out.second
    print("collision:", inst.values(a), a.sum, "and", inst.values(b), b.sum, "in bin", grid.index(a.sum))
    sol = collision_solution(inst, a, b)
    print("after removing the common part:", inst.values(sol.set1), "vs", inst.values(sol.set2))
    print("ratio", sol.ratio, "<= 1 + eps:", sol.ratio.as_fraction() <= 1 + eps.as_fraction())
else:
    print("no collision;", len(out.entries), "large subsets go on to the Partition step")
