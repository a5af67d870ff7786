"""Quickstart: approximate an instance and compare with the exact optimum."""

from ssratio import Epsilon, PartitionStrategy, brute_force_ssr, ssr, validate_instance

raw = [41, 7, 133, 90, 18, 62, 255, 11]
inst = validate_instance(raw)          # sorts; returns a DuplicatePair if a value repeats
print("instance:", inst.elements)

eps = Epsilon.parse("1/4")
sol = ssr(inst, eps, PartitionStrategy.from_name("trim"))
print("set 1:", inst.values(sol.set1), "sum", sol.set1.sum)
print("set 2:", inst.values(sol.set2), "sum", sol.set2.sum)
print("ratio:", sol.ratio, "~", sol.ratio.decimal(6))

# the exhaustive oracle is fine at this size (3**8 assignments)
r_opt, witness = brute_force_ssr(inst)
print("optimum:", r_opt, "via", inst.values(witness.set1), "vs", inst.values(witness.set2))
print("within 1 + eps of optimum:", sol.ratio.as_fraction() <= (1 + eps.as_fraction()) * r_opt.as_fraction())
