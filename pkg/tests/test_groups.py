from kanforge import groups as gr


def test_cyclic_tables():
    z4 = gr.cyclic(4)
    assert z4.validate() == []
    assert z4.mul(3, 2) == 1
    assert z4.inv(3) == 1
    assert z4.order_of(2) == 2
    assert z4.is_abelian()


def test_symmetric_group():
    s3 = gr.symmetric(3)
    assert s3.validate() == []
    assert len(s3) == 6
    assert not s3.is_abelian()


def test_isomorphism_search():
    z6 = gr.cyclic(6)
    z23 = gr.direct_product(gr.cyclic(2), gr.cyclic(3))
    assert z6.is_isomorphic_to(z23)
    assert not gr.symmetric(3).is_isomorphic_to(z6)
    assert gr.trivial_group().is_isomorphic_to(gr.cyclic(1))


def test_isomorphism_respects_structure():
    z3 = gr.cyclic(3)
    f = z3.isomorphism_to(gr.cyclic(3))
    for a in z3.elements:
        for b in z3.elements:
            assert f[z3.mul(a, b)] == (f[a] + f[b]) % 3
