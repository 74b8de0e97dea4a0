"""Plane-wave and angular eigenstates of the deformed Schroedinger operator.

The angular section prints what the action actually does next to the
statement being checked; the two differ by the sign pattern of rho_j.
"""

from elchi.schrodinger import (
    AngularSpec, PlaneWaveSpec, angular_state, plane_wave_convert, plane_wave_state,
    verify_angular, verify_plane_wave,
)

state = plane_wave_state(PlaneWaveSpec(order=2))
print("plane wave, N=2:")
for key, c in sorted(plane_wave_convert(state).items()):
    print(f"  (chi)_{key[0]} (1-chibar)_{key[1]}: {c}")

rep = verify_plane_wave(4, 4)
print(rep.summary(), "| Casimir eigenvalue", rep.eigenvalue)

print()
print("angular state r=-1, L=1:", angular_state(AngularSpec(-1, 1)))
rep = verify_angular(max_r=2, max_l=3)
print(rep.summary())
for key in ("per_element_opposite_sign", "ladder_signs_flipped", "observed_HpHm_eigenvalue", "modulus"):
    print(f"  {key}: {rep.details[key]}")
