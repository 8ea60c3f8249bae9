"""Separated and well-distributed point sets.

A set is separated when pairwise Euclidean distances stay above a constant,
and well-distributed when every cube of some fixed side meets it.  The
integer lattice is the canonical example of both; the generators here build
it, jitter it reproducibly, and the predicates measure what survives.
"""

from gaugedist import (
    GeneratorSpec,
    alpha_dimension_estimate,
    generate,
    separation_constant,
    well_distributed_check,
)

# The unit lattice clipped to [-R, R]^2.
lattice = generate(GeneratorSpec(kind="lattice", R=4.0))
print("lattice points in [-4,4]^2:", len(lattice))
print("separation constant:", separation_constant(lattice))  # nearest neighbors -> 1.0

# A perturbed lattice keeps separation >= spacing - 2*jitter (offsets are
# drawn inside the jitter disc, deterministically from the seed).
jittered = generate(GeneratorSpec(kind="perturbed_lattice", R=4.0, jitter=0.2, seed=42))
print("jitter 0.2 separation:", separation_constant(jittered), ">= 0.6")

# The density check scans squares of side C with corners on a stride grid and
# reports the empty ones.  Side 1.5 always catches a lattice point; side 0.9
# can dodge the lattice entirely.
ok = well_distributed_check(lattice, C=1.5, stride=0.5)
print(f"\nC=1.5: ok={ok.ok} over {ok.cubes_scanned} squares")
bad = well_distributed_check(lattice, C=0.9, stride=0.25)
print(f"C=0.9: ok={bad.ok}, first empty square corner: {bad.witnesses[0]}")

# Growth exponent: counting points in growing windows and fitting a power law
# recovers the dimension (2 for the lattice, 1 for a line of points).
samples = [(R, len(generate(GeneratorSpec(kind="lattice", R=float(R))))) for R in (10, 20, 40, 80)]
fit = alpha_dimension_estimate(samples)
print(f"\nlattice growth exponent: {fit.alpha:.4f} (residual {fit.residual:.2e})")

line_samples = [(R, 2 * R + 1) for R in (10, 20, 40, 80)]
print(f"axis-only growth exponent: {alpha_dimension_estimate(line_samples).alpha:.4f}")
