use ymalg_core::ym::DEFAULT_DEGREE_CAP;
use ymalg_core::{
    ideal_graded_component, lyndon_basis, ym_dim, ym_relations, Error, FreeLieAlgebra, FreeLieElement, IdealTower,
};

/// Graded dimensions of ym(n) recovered from the Hilbert series
/// `1/(1 - n t + n t³ - t⁴)` of its enveloping algebra: if `H = ∏ (1 - t^d)^(-a_d)`
/// then `t H'/H = Σ_m t^m Σ_{d | m} d a_d`.
fn dims_from_hilbert_series(n: i64, max: usize) -> Vec<i64> {
    let mut h = vec![0i64; max + 1];
    h[0] = 1;
    for k in 1..=max {
        let at = |j: isize| if j >= 0 { h[j as usize] } else { 0 };
        let k = k as isize;
        h[k as usize] = n * at(k - 1) - n * at(k - 3) + at(k - 4);
    }
    // t H'/H = (n t - 3n t³ + 4 t⁴) H
    let s: Vec<i64> = (0..=max)
        .map(|m| {
            let at = |j: usize| if j <= m { h[m - j] } else { 0 };
            n * at(1) - 3 * n * at(3) + 4 * at(4)
        })
        .collect();
    let mut a = vec![0i64; max + 1];
    for d in 1..=max {
        let lower: i64 = (1..d).filter(|e| d % e == 0).map(|e| e as i64 * a[e]).sum();
        assert_eq!((s[d] - lower) % d as i64, 0);
        a[d] = (s[d] - lower) / d as i64;
    }
    a[1..].to_vec()
}

#[test]
fn weak_dims_match_hilbert_series() {
    for (n, max) in [(2usize, 7usize), (3, 7), (4, 5)] {
        let mut tower = IdealTower::new(ym_relations(n, false));
        let ours: Vec<i64> = tower.graded_dims(max).unwrap().as_slice().iter().map(|&x| x as i64).collect();
        assert_eq!(ours, dims_from_hilbert_series(n as i64, max), "n = {n}");
    }
}

#[test]
fn oracle_sanity() {
    assert_eq!(dims_from_hilbert_series(2, 6), vec![2, 1, 0, 0, 0, 0]);
    assert_eq!(dims_from_hilbert_series(3, 3), vec![3, 3, 5]);
}

#[test]
fn small_tables() {
    assert_eq!(ym_dim(1, 1, false).unwrap(), 1);
    assert_eq!(ym_dim(1, 2, false).unwrap(), 0);
    let mut t = IdealTower::new(ym_relations(3, false));
    let rows = t.dimension_table(3).unwrap();
    assert_eq!(rows.iter().map(|r| r.ym_dim).collect::<Vec<_>>(), vec![3, 3, 5]);
    assert_eq!(rows[2].ideal_dim, 3);
}

#[test]
fn strong_ideal_contains_weak_ideal() {
    for n in 2..=3 {
        let (weak, strong) = (ym_relations(n, false), ym_relations(n, true));
        assert_eq!(strong.relators().len(), n * n);
        for d in 3..=5 {
            let w = ideal_graded_component(&weak, d).unwrap();
            let s = ideal_graded_component(&strong, d).unwrap();
            assert!(w.dim() <= s.dim());
            for row in w.rows() {
                assert!(s.contains(&row).unwrap(), "n = {n}, d = {d}");
            }
        }
    }
}

#[test]
fn components_form_an_ideal() {
    // brackets with degree-2 elements, not just generators, stay inside
    let n = 3;
    let pres = ym_relations(n, false);
    let f = FreeLieAlgebra::new(n);
    let mut tower = IdealTower::new(pres.clone());
    for d in 3..=4 {
        let rows = tower.component(d).unwrap().rows();
        let next = ideal_graded_component(&pres, d + 2).unwrap();
        for w in lyndon_basis(n, 2) {
            let y = FreeLieElement::basis(n, w);
            for r in &rows {
                assert!(next.contains(&f.bracket(&y, r).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn relators_vanish_and_generators_survive() {
    let pres = ym_relations(3, false);
    let mut tower = IdealTower::new(pres.clone());
    for r in pres.relators() {
        assert!(tower.is_zero(r).unwrap());
    }
    let f = FreeLieAlgebra::new(3);
    assert!(!tower.is_zero(&f.generator(1)).unwrap());
    let x12 = f.bracket(&f.generator(1), &f.generator(2)).unwrap();
    assert!(!tower.is_zero(&x12).unwrap());
}

#[test]
fn cap_is_enforced() {
    let mut tower = IdealTower::new(ym_relations(2, false));
    assert!(matches!(tower.ideal_dim(DEFAULT_DEGREE_CAP + 1), Err(Error::DegreeCapExceeded { .. })));
    let mut tower = IdealTower::with_cap(ym_relations(2, false), 4);
    assert!(tower.ideal_dim(4).is_ok());
    assert!(tower.ideal_dim(5).is_err());
}
