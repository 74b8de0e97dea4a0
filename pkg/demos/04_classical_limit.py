"""z -> 0: plane waves become exponentials, angular states Bessel-type series."""

from elchi.classical import classical_oracle, limit_compare, phase_convention_report, z0_limit
from elchi.schrodinger import AngularSpec, PlaneWaveSpec, angular_state, plane_wave_state

pw = plane_wave_state(PlaneWaveSpec(order=3))
print("limit of the N=3 plane wave:", z0_limit(pw))
print(limit_compare(pw, classical_oracle("planewave", 3), 3).summary())

phase = phase_convention_report(4)
print(phase.summary(), "|", phase.details["substitution"])

for r in (-2, 0, 2):
    fam = "chi" if r <= 0 else "chibar"
    st = angular_state(AngularSpec(r, 3))
    print(f"r={r:+d}:", z0_limit(st))
    print("  ", limit_compare(st, classical_oracle("bessel", 3, r=abs(r), family=fam), 8).summary())
