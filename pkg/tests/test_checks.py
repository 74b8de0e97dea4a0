from elchi.checks import (
    abstract_identities_report, duality_report, generator_set, hopf_f_report, hopf_u_report,
    lemma22_report, prop23_report,
)


def test_hopf_small_windows():
    assert hopf_f_report(lmax=1, degree=2, pair_degree=1, pair_lmax=1).passed
    assert hopf_u_report(degree=1, bmax=1).passed


def test_duality_small_window():
    rep = duality_report(lmax=1, degree=1)
    assert rep.passed, rep.summary()
    assert {"P1", "P2", "J", "E", "tau", "nu1", "nu2"} <= set(generator_set())


def test_twisted_primitive_and_plane():
    assert lemma22_report().passed
    assert prop23_report(plane_degree=3, lmax=1, degree=2).passed


def test_abstract_identities():
    rep = abstract_identities_report()
    assert rep.passed
    assert rep.details["HH+* = HH-"] is True
    assert rep.details["Jscript* = Jscript"] is False
