"""tightness script."""
from pyspecenergy.FieldArithmetic.primefield import make_field
from pyspecenergy.Harness.theorems import tightness_subgroup
from pyspecenergy.Sets.constructors import coset, coset_representatives, mult_subgroup

field = make_field(101)
H = mult_subgroup(field, 25)

print("Subgroup of order 25 in F_101*:")
print(H.to_list())
for lam in coset_representatives(field, H)[1:]:
    print(f"coset {lam}H:", coset(field, H, lam).to_list())

for eps in (0.9, 0.5, 0.25, 0.1):
    report = tightness_subgroup(field, 25, eps)
    print("eps: ", eps, " coset: ", report.extras["coset_rep"], " notes: ", report.notes)
    print("E4(coset) = ", report.lhs, " d^5 = ", 25**5, " passed: ", report.passed)
    print("max |A^(r)| / sqrt(p) = ", report.extras["max_over_sqrt_p"])

# spectrum of H at one threshold
# from pyspecenergy.Spectral.fourier import fourier_table, spectrum
# print(spectrum(fourier_table(field, H), 0.1).elements)
