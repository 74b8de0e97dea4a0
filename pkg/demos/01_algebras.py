"""Tour of the two Hopf algebras and their pairing.

Run with ``python3 demos/01_algebras.py``.
"""

from elchi.envalg import E, J, P1, P2, named_element, u_antipode, u_coproduct, u_f_pairing, lambda_action
from elchi.funalg import a1, a2, f_coproduct, f_antipode, th

# function algebra: Th(l) are the group-like phases, a1 and a2 the translations
print("a2*a1      =", a2() * a1())
print("a1*Th(1)   =", a1() * th(1))
print("Delta(a1)  =", f_coproduct(a1()))
print("S(a1)      =", f_antipode(a1()))

# enveloping algebra in PBW order P1^a P2^c E^b J^d, with E = exp(z P2 / 2)
print()
print("J*P1       =", J() * P1())
print("Delta(P1)  =", u_coproduct(P1()))
print("S(J)       =", u_antipode(J()))
hp = named_element("Hplus")
print("H+         =", hp)
print("Delta(H+)  =", u_coproduct(hp))

# pairing and the left action lambda
print()
print("<E(2), a2> =", u_f_pairing(E(2), a2()))
print("<tau, Th(3)> =", u_f_pairing(named_element("tau"), th(3)))
print("lambda(P2) Th(1) a1 a2^2 =", lambda_action(P2(), th(1) * a1() * a2() ** 2))
print("lambda(Jscript) a1 =", lambda_action(named_element("Jscript"), a1()))
