use superhowe::algebra::{format_poly, parse_poly, SuperPolynomial};
use superhowe::combinatorics::{MarkedDiagram, Partition};
use superhowe::hwv::{
    find_s2_relation, verify_identity_cor, verify_keylemma, verify_maincor, Budget, S2Model, TensorModel,
};
use superhowe::operators::{is_highest, WeightVector};
use superhowe::Error;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn poly(model: &TensorModel, s: &str) -> SuperPolynomial {
    parse_poly(model.table(), s).unwrap()
}

#[test]
fn leading_minors_are_highest() {
    let model = TensorModel::new(3, 0, 3, 0);
    assert_eq!(model.delta_r(1).unwrap(), poly(&model, "x[1,1]"));
    assert_eq!(
        model.delta_r(2).unwrap(),
        poly(&model, "x[1,1]*x[2,2] - x[1,2]*x[2,1]")
    );
    for r in 1..=3 {
        let d = model.delta_r(r).unwrap();
        assert!(is_highest(&d, &model.realizations()).unwrap());
    }
}

#[test]
fn mixed_determinants() {
    let model = TensorModel::new(3, 0, 1, 2);
    assert_eq!(model.delta_kr(1, 1).unwrap(), model.delta_r(1).unwrap());
    let d = model.delta_kr(1, 2).unwrap();
    assert_eq!(d, poly(&model, "x[1,1]*h[1,2] - x[1,2]*h[1,1]"));
    // eps_1 + eps~_1 + eps~_2 + delta_1
    assert_eq!(model.joint_weight(&d).unwrap(), WeightVector(vec![1, 1, 0, 1, 1, 0]));
    assert!(model.delta_kr(3, 2).is_err());
    assert!(model.delta_kr(1, 4).is_err());

    let model = TensorModel::new(3, 0, 0, 1);
    assert_eq!(
        model.delta_kr(1, 3).unwrap(),
        poly(&model, "6*h[1,1]*h[1,2]*h[1,3]")
    );
}

#[test]
fn q_zero_vectors() {
    let model = TensorModel::new(3, 0, 1, 2);
    assert_eq!(model.hwv_q_zero(&p("2")).unwrap(), model.delta_r(1).unwrap().pow(2));
    assert_eq!(model.hwv_q_zero(&p("1,1,1")).unwrap(), model.delta_kr(1, 3).unwrap());
    let model = TensorModel::new(2, 0, 1, 1);
    assert!(matches!(model.hwv_q_zero(&p("2,2")), Err(Error::HookViolation(_))));
    assert!(TensorModel::new(2, 1, 1, 1).hwv_q_zero(&p("1")).is_err());
}

#[test]
fn vanishing_products() {
    assert!(verify_identity_cor(2, 2, 1).unwrap());
    assert!(verify_identity_cor(3, 2, 1).unwrap());
    assert!(verify_identity_cor(3, 1, 0).unwrap());
    assert!(verify_identity_cor(4, 3, 2).unwrap());
    assert!(verify_identity_cor(1, 2, 0).is_err());
}

#[test]
fn smallest_rectangle() {
    let model = TensorModel::new(1, 1, 1, 1);
    let g = model.gamma_r_pm(1).unwrap();
    assert_eq!(g, poly(&model, "x[1,1]*y[1,1] + h[1,1]*xi[1,1]"));
    assert!(is_highest(&g, &model.realizations()).unwrap());
}

#[test]
fn rectangle_weights() {
    // r sum eps_i + r sum eps~_i + sum_{j<=r} delta_j + sum_{j<=r} delta~_j
    let model = TensorModel::new(1, 2, 1, 2);
    let g = model.gamma_r_pm(2).unwrap();
    assert_eq!(model.joint_weight(&g).unwrap(), WeightVector(vec![2, 1, 1, 2, 1, 1]));
    assert!(is_highest(&g, &model.realizations()).unwrap());
}

#[test]
fn marked_diagram_matrix() {
    let model = TensorModel::new(4, 6, 4, 6);
    let d = MarkedDiagram::new(4, vec![Some(1), None, Some(3), Some(2), Some(2), Some(3)]);
    let y = model.y_d(&d).unwrap();
    let firsts: Vec<String> = (0..6).map(|i| format_poly(y.entry(i, 0))).collect();
    assert_eq!(firsts, ["xi[1,1]", "y[2,1]", "xi[3,1]", "xi[2,1]", "xi[2,1]", "xi[3,1]"]);
    assert_eq!(format_poly(y.entry(1, 5)), "y[2,6]");
    assert!(!y.superdet().unwrap().is_zero());
}

#[test]
fn p_equals_m_pipeline() {
    let model = TensorModel::new(1, 2, 1, 2);
    let lambda = p("2,2,1,1");
    let v = model.hwv_p_equals_m(&lambda).unwrap();
    assert!(!v.is_zero());
    assert!(is_highest(&v, &model.realizations()).unwrap());
    assert_eq!(model.joint_weight(&v).unwrap(), model.expected_weight(&lambda).unwrap());

    // without rows below m the vector is a product of leading minors
    let model = TensorModel::new(2, 1, 2, 1);
    assert_eq!(
        model.hwv_p_equals_m(&p("2,1")).unwrap(),
        &model.delta_r(2).unwrap() * &model.delta_r(1).unwrap()
    );
    // a single row below m needs no division
    assert_eq!(
        model.hwv_p_equals_m(&p("1,1,1")).unwrap(),
        model.gamma_r_pm(1).unwrap()
    );
}

#[test]
fn substituted_matrices() {
    let model = TensorModel::new(2, 0, 2, 1);
    assert_eq!(model.x_sub(1, &[]).unwrap(), model.det_x().unwrap());
    assert_eq!(model.x_sub(1, &[1, 2]).unwrap(), poly(&model, "2*h[1,1]*h[1,2]"));
    assert_eq!(model.x_sub(1, &[2]).unwrap(), poly(&model, "x[1,1]*h[1,2] - x[1,2]*h[1,1]"));
    assert!(model.x_sub(1, &[3]).is_err());
}

#[test]
fn row_set_identities() {
    for p in 1..=3 {
        assert!(verify_keylemma(p).unwrap());
    }
    let out = verify_maincor(3, &[1, 2], &[2]).unwrap();
    assert!(out.all());
    assert!(verify_maincor(2, &[2], &[1]).unwrap().merge);
}

#[test]
fn general_gamma_smallest() {
    let model = TensorModel::new(2, 1, 1, 1);
    let g = model.gamma_general(&[1]).unwrap();
    assert!(!g.is_zero());
    assert!(is_highest(&g, &model.realizations()).unwrap());
    assert!(g.terms().all(|(mono, _)| mono.vars().all(|(v, _)| !model.table().info(v).auxiliary)));
    // lambda_{p+1} eps_1..m + lambda_{p+1} eps~_1..p + (lambda'-m) delta + (lambda'-p) delta~
    assert_eq!(model.joint_weight(&g).unwrap(), model.expected_weight(&p("1,1,1")).unwrap());
}

#[test]
fn general_dispatch() {
    let model = TensorModel::new(3, 0, 1, 2);
    for lambda in ["3", "2,1", "1,1,1", "2,2,1", "3,1,1"] {
        let l = p(lambda);
        assert_eq!(model.hwv_general(&l).unwrap(), model.hwv_q_zero(&l).unwrap());
    }
    let model = TensorModel::new(1, 1, 2, 1);
    let v = model.hwv_general(&p("2,1,1")).unwrap();
    assert!(is_highest(&v, &model.realizations()).unwrap());
    assert!(matches!(
        TensorModel::new(1, 0, 1, 0).hwv_general(&p("1,1")),
        Err(Error::HookViolation(_))
    ));
}

#[test]
fn gl11_family() {
    // (x_1^1)^i Delta_{1,j} and (x_1^1)^i eta_1^1...eta_1^j both occur in p = j
    let model = TensorModel::new(2, 0, 1, 1);
    let a = &model.delta_r(1).unwrap().pow(2) * &model.delta_kr(1, 2).unwrap();
    assert!(is_highest(&a, &model.realizations()).unwrap());
    let b = &model.delta_r(1).unwrap().pow(2) * &poly(&model, "h[1,1]*h[1,2]");
    assert!(!is_highest(&b, &model.realizations()).unwrap());
}

#[test]
fn budget_aborts() {
    let model = TensorModel::new(2, 1, 2, 1).with_budget(Budget::limit(2));
    assert!(matches!(model.hwv_general(&p("2,2,1")), Err(Error::OverBudget { .. })));
}

#[test]
fn s2_vectors() {
    let model = S2Model::new(1, 2);
    let t = model.table().clone();
    assert_eq!(model.hwv_s2(&p("2")).unwrap(), parse_poly(&t, "x[1,1]").unwrap());
    assert_eq!(
        model.delta_xi(1, 2).unwrap(),
        parse_poly(&t, "-x[1,1]*y[1,2] + h[1,1]*h[2,1]").unwrap()
    );
    assert!(model.delta_xi(2, 2).unwrap().is_zero());
    let v = model.hwv_s2(&p("2,2")).unwrap();
    assert_eq!(v, model.gamma_2l(1).unwrap());
    assert!(is_highest(&v, &[model.glmn()]).unwrap());
    assert!(matches!(model.hwv_s2(&p("4,4")), Err(Error::HookViolation(_))));
    assert!(model.hwv_s2(&p("3,1")).is_err());

    let model = S2Model::new(3, 0);
    let v = model.hwv_s2(&p("4,2,2")).unwrap();
    assert_eq!(v, &model.delta_r(3).unwrap() * &model.delta_r(1).unwrap());
}

#[test]
fn s2_weights() {
    let model = S2Model::new(2, 4);
    let d = model.delta_xi(1, 2).unwrap();
    assert_eq!(model.weight(&d).unwrap(), WeightVector(vec![2, 2, 1, 1, 0, 0]));
    let g = model.gamma_2l(2).unwrap();
    assert!(!g.is_zero());
    assert_eq!(model.weight(&g).unwrap(), WeightVector(vec![4, 4, 1, 1, 1, 1]));
    assert!(is_highest(&g, &[model.glmn()]).unwrap());
}

#[test]
fn pairing_sum_has_three_terms_without_even_rows() {
    let model = S2Model::new(0, 4);
    let g = model.gamma_2l(2).unwrap();
    assert_eq!(g.len(), 3);
}

#[test]
fn s2_semigroup_relation() {
    let r = find_s2_relation(1, 2, 6).unwrap().unwrap();
    let model = S2Model::new(1, 2);
    let lhs = &model.hwv_s2(&r.lhs[0]).unwrap() * &model.hwv_s2(&r.lhs[1]).unwrap();
    let rhs = &model.hwv_s2(&r.rhs[0]).unwrap() * &model.hwv_s2(&r.rhs[1]).unwrap();
    assert_eq!(lhs, rhs.scale(&r.scalar));
    assert!(find_s2_relation(2, 1, 6).unwrap().is_none());
}
