use extact::activity::ActivityTable;
use extact::complexes::{
    act_cone_points_predicted, barred_slots, classify_topology, reduced_complex,
    restriction_sets_predicted, shelling_check,
};
use extact::corpus::{m0, M0_GRAPH};
use extact::orders::{ext_characterizations, int_characterizations};
use extact::{
    basis_activity, external_activity_complex, independence_complex, leq_ext, leq_extint, leq_int,
    tutte_polynomial, BasisOrder, BasisPoset, ComplexKind, ElementSet, MatroidError, OrderKind,
    OrderedMatroid, Topology,
};

fn s(xs: &[usize]) -> ElementSet {
    ElementSet::from(xs)
}

fn sg(u: usize, p: &[usize], b: &[usize]) -> ElementSet {
    s(p) | barred_slots(u, s(b))
}

#[test]
fn construction() {
    let m = m0();
    assert_eq!(m.rank(), 3);
    assert_eq!(m.bases().len(), 8);
    assert!(!m.is_independent(s(&[1, 2, 3])));
    assert!(m.is_independent(ElementSet::EMPTY));
    assert_eq!(
        OrderedMatroid::from_bases(4, [s(&[1, 2]), s(&[3, 4])]).unwrap_err().code(),
        "exchange-axiom-violated"
    );
    assert_eq!(OrderedMatroid::uniform(4, 2).unwrap().bases().len(), 6);
    assert_eq!(OrderedMatroid::uniform(3, 3).unwrap().bases(), &[s(&[1, 2, 3])]);
    let (v, edges) = M0_GRAPH;
    assert_eq!(OrderedMatroid::from_graph(v, &edges).unwrap(), m);
    let parallel = OrderedMatroid::from_graph(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
    assert_eq!(parallel, OrderedMatroid::uniform(3, 1).unwrap());
}

#[test]
fn circuits_duality_minors() {
    assert_eq!(m0().circuits(), &[s(&[1, 2, 3]), s(&[1, 4, 5]), s(&[2, 3, 4, 5])]);
    assert!(OrderedMatroid::uniform(3, 3).unwrap().circuits().is_empty());
    assert_eq!(
        OrderedMatroid::uniform(3, 1).unwrap().circuits(),
        &[s(&[1, 2]), s(&[1, 3]), s(&[2, 3])]
    );
    assert_eq!(
        OrderedMatroid::uniform(4, 1).unwrap().dual(),
        OrderedMatroid::uniform(4, 3).unwrap()
    );
    let c = OrderedMatroid::uniform(3, 1).unwrap().contract(1).unwrap();
    assert_eq!((c.ground(), c.bases()), (s(&[2, 3]), &[ElementSet::EMPTY][..]));
    assert_eq!(m0().loops(), ElementSet::EMPTY);
    assert_eq!(m0().coloops(), ElementSet::EMPTY);
    assert_eq!(
        OrderedMatroid::uniform(2, 2).unwrap().delete(1).unwrap_err(),
        MatroidError::DeleteColoop(1)
    );
}

#[test]
fn fundamental_circuits() {
    let m = m0();
    assert_eq!(m.fundamental_circuit(s(&[1, 2, 4]), 3).unwrap(), s(&[1, 2, 3]));
    assert_eq!(m.fundamental_circuit(s(&[2, 3, 4]), 1).unwrap(), s(&[1, 2, 3]));
    let co = m.fundamental_cocircuit(s(&[1, 2, 5]), 5).unwrap();
    assert!(co.iter().any(|x| x < 5));
    assert_eq!(m.min_of(m.fundamental_cocircuit(s(&[1, 2, 4]), 1).unwrap()), Some(1));
    assert!(matches!(
        m.fundamental_circuit(s(&[1, 2, 3]), 4),
        Err(MatroidError::NotABasis(_))
    ));
    assert!(matches!(
        m.fundamental_circuit(s(&[1, 2, 4]), 1),
        Err(MatroidError::ElementInBasis { .. })
    ));
    assert!(matches!(
        m.fundamental_cocircuit(s(&[1, 2, 4]), 3),
        Err(MatroidError::ElementNotInBasis { .. })
    ));
}

#[test]
fn intersecting_circuits() {
    assert!(m0().has_intersecting_circuits() && m0().has_u31_minor());
    let tri = OrderedMatroid::uniform(3, 2).unwrap();
    assert!(!tri.has_intersecting_circuits() && !tri.has_u31_minor());
    let two = OrderedMatroid::from_graph(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
    assert!(!two.has_intersecting_circuits() && !two.has_u31_minor());
}

#[test]
fn tutte() {
    let t = tutte_polynomial(&m0());
    assert_eq!(t.to_string(), "x^3 + 2x^2 + x + 2xy + y + y^2");
    assert_eq!(t.shelling_coefficients(3), vec![1, 2, 3, 2]);
    assert_eq!(t.eval(1, 1), 8);
}

#[test]
fn active_order_examples() {
    let m = m0();
    assert!(leq_ext(&m, s(&[2, 3, 4]), s(&[3, 4, 5])).unwrap());
    assert!(!leq_ext(&m, s(&[1, 2, 4]), s(&[1, 3, 5])).unwrap());
    for &b in m.bases() {
        assert!(leq_int(&m, s(&[1, 2, 4]), b).unwrap());
        assert!(leq_extint(&m, s(&[1, 2, 4]), b).unwrap());
        assert!(leq_extint(&m, b, b).unwrap());
    }
    // IP(134) = {3} ⊆ 234, and 134 is the smallest basis containing {3,4}
    assert!(leq_int(&m, s(&[1, 3, 4]), s(&[2, 3, 4])).unwrap());
    assert_eq!(int_characterizations(&m, s(&[1, 3, 4]), s(&[2, 3, 4])).unwrap(), [true; 4]);
    assert!(!leq_int(&m, s(&[2, 3, 5]), s(&[1, 2, 4])).unwrap());
    assert!(!leq_extint(&m, s(&[1, 3, 5]), s(&[2, 3, 4])).unwrap());
    assert_eq!(ext_characterizations(&m, s(&[2, 3, 4]), s(&[3, 4, 5])).unwrap(), [true; 4]);
    assert!(leq_ext(&m, s(&[1, 2, 3]), s(&[3, 4, 5])).is_err());
}

#[test]
fn posets_and_extensions() {
    let m = m0();
    let table = ActivityTable::new(&m);
    let i345 = m.basis_index(s(&[3, 4, 5])).unwrap();
    assert_eq!(3 - table.get(i345).ia.len(), 3);
    assert_eq!(table.get(i345).ea.len(), 2);
    let lex = BasisOrder::new(m.bases().to_vec());
    let seq = |bs: [[usize; 3]; 8]| BasisOrder::new(bs.iter().map(|b| s(b)).collect());
    let ext_order = seq([[1, 2, 4], [1, 3, 5], [1, 2, 5], [1, 3, 4], [2, 3, 4], [2, 3, 5], [2, 4, 5], [3, 4, 5]]);
    let int_order = seq([[1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 4, 5], [3, 4, 5], [2, 3, 4], [2, 3, 5]]);
    for kind in [OrderKind::Ext, OrderKind::Int, OrderKind::ExtInt] {
        let p = BasisPoset::build(&m, kind).unwrap();
        assert!(p.is_linear_extension(&lex).unwrap());
        for ord in p.linear_extensions(100_000, 0) {
            assert!(p.is_linear_extension(&ord).unwrap());
        }
    }
    assert!(BasisPoset::build(&m, OrderKind::Ext).unwrap().is_linear_extension(&ext_order).unwrap());
    assert!(BasisPoset::build(&m, OrderKind::Int).unwrap().is_linear_extension(&int_order).unwrap());
    let one = BasisPoset::build(&OrderedMatroid::uniform(2, 2).unwrap(), OrderKind::Ext).unwrap();
    assert_eq!(one.linear_extensions(5, 0).len(), 1);
}

#[test]
fn complexes() {
    let m = m0();
    let inc = independence_complex(&m);
    assert_eq!((inc.facets().len(), inc.facets()[0].len()), (8, 3));
    assert_eq!(independence_complex(&OrderedMatroid::uniform(3, 1).unwrap()).facets().len(), 3);
    let tri = independence_complex(&OrderedMatroid::uniform(3, 2).unwrap());
    assert_eq!(tri.h_vector().unwrap(), vec![1, 1, 1]);
    assert_eq!(tri.euler_characteristic(), 0);

    let act = external_activity_complex(&m);
    assert_eq!(act.h_vector().unwrap(), vec![1, 2, 3, 2, 0, 0, 0, 0, 0]);
    assert_eq!(inc.h_vector().unwrap(), vec![1, 2, 3, 2]);
    assert_eq!(act_cone_points_predicted(&m), sg(5, &[3, 4, 5], &[1]));
    let red = reduced_complex(&m);
    assert_eq!(red.euler_characteristic(), 1);
    assert_eq!(red.reduced_euler_characteristic(), 0);

    let lex = BasisOrder::new(m.bases().to_vec());
    let i134 = m.basis_index(s(&[1, 3, 4])).unwrap();
    let r_in = restriction_sets_predicted(&m, &lex, ComplexKind::In).unwrap();
    let r_act = restriction_sets_predicted(&m, &lex, ComplexKind::Act).unwrap();
    assert_eq!(r_in[i134], s(&[3]));
    assert_eq!(r_act[i134], sg(5, &[], &[3]));
    assert_eq!(r_act[0], ElementSet::EMPTY);
    let report = shelling_check(&act, &(0..8).collect::<Vec<_>>()).unwrap();
    assert_eq!(report.restriction_sets, r_act);
}

#[test]
fn topology_examples() {
    assert_eq!(classify_topology(&m0()), Topology::ContractibleU31);
    assert_eq!(classify_topology(&OrderedMatroid::uniform(3, 2).unwrap()), Topology::SphereOfDim(1));
    let g = OrderedMatroid::from_graph(5, &[(1, 2), (2, 3), (1, 3), (4, 5), (4, 5)]).unwrap();
    assert_eq!(classify_topology(&g), Topology::SphereOfDim(2));
    assert_eq!(reduced_complex(&g).dimension(), 2);
}

#[test]
fn activity_rows() {
    let m = m0();
    let a = basis_activity(&m, s(&[1, 2, 5])).unwrap();
    assert_eq!(a.ep, s(&[3, 4]));
    let act = external_activity_complex(&m);
    assert_eq!(act.facets()[1], sg(5, &[1, 2, 3, 4, 5], &[1, 2, 5]));
}
