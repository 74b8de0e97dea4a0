"""The quantum plane generated by chi and chibar, [chi, chibar] = chi - chibar."""

from elchi.envalg import E, named_element
from elchi.qplane import (
    chi, chibar, invariance_check, plane_coaction, plane_lambda, plane_to_f, poch_basis_convert,
    poch_chi, rho_poly,
)

c, cb = chi(), chibar()
print("chibar*chi  =", cb * c)
print("chi as F    =", plane_to_f(c))
print("ell(X)-invariant:", invariance_check(plane_to_f(c ** 2 * cb)))
print("coaction(chi) =", plane_coaction(c))

# Pochhammer symbols and the rho polynomials
print()
print("(chi)_3     =", poch_chi(3))
print("rho_2       =", rho_poly(2))
print("chi^2 in the rho/Pochhammer basis:", poch_basis_convert(c ** 2, "to_poch"))

# the deformed dilatations act by shifts
print()
print("lambda(E(-2)) chi       =", plane_lambda(E(-2), c))
print("lambda(Jscript) (chi)_3 =", plane_lambda(named_element("Jscript"), poch_chi(3)))
print("lambda(Jscript) rho_2   =", plane_lambda(named_element("Jscript"), rho_poly(2)))
