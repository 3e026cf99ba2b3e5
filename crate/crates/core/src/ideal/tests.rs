use super::*;
use crate::field::{GfKind, Rational, Rationals};
use crate::poly::Ring;

fn q(vars: &[&str]) -> RingRef<Rational> {
    Ring::new(Rationals, vars).unwrap()
}

fn p(r: &RingRef<Rational>, s: &str) -> Polynomial<Rational> {
    Polynomial::parse(r, s).unwrap()
}

fn id(r: &RingRef<Rational>, gens: &[&str]) -> Ideal<Rational> {
    Ideal::parse(r, gens).unwrap()
}

#[test]
fn membership() {
    let r = q(&["x", "y"]);
    assert!(id(&r, &["x", "y"]).contains(&p(&r, "x^2 + x*y")).unwrap());
    assert!(!id(&r, &["x^2"]).contains(&p(&r, "x")).unwrap());
}

#[test]
fn sums_products_powers() {
    let r = q(&["x", "y", "z"]);
    let xy = id(&r, &["x"]).product(&id(&r, &["y"])).unwrap();
    assert!(xy.equals(&id(&r, &["x*y"])).unwrap());
    let sq = id(&r, &["x", "y"]).power(2).unwrap();
    assert!(sq.equals(&id(&r, &["x^2", "x*y", "y^2"])).unwrap());
    assert!(id(&r, &["x"]).power(0).unwrap().is_unit().unwrap());
    let i = id(&r, &["x*y", "x*z", "y*z"]);
    let i2 = i.power(2).unwrap();
    assert_eq!(i2.gens().len(), 6);
    assert!(!i2.contains(&p(&r, "x*y*z")).unwrap());
}

#[test]
fn intersections() {
    let r = q(&["x", "y", "z"]);
    let meet = id(&r, &["x"]).intersect(&id(&r, &["y"])).unwrap();
    assert!(meet.equals(&id(&r, &["x*y"])).unwrap());
    let a = id(&r, &["x", "y"]).power(2).unwrap();
    let b = id(&r, &["x", "z"]).power(2).unwrap();
    let c = id(&r, &["y", "z"]).power(2).unwrap();
    let all = a.intersect(&b).unwrap().intersect(&c).unwrap();
    assert!(all.contains(&p(&r, "x*y*z")).unwrap());
    let i = id(&r, &["x^2 - y*z", "x*y + z^2"]);
    assert!(i.intersect(&i).unwrap().equals(&i).unwrap());
    // non-monomial path
    let j = id(&r, &["x - y"]);
    let k = id(&r, &["x + y"]);
    assert!(j
        .intersect(&k)
        .unwrap()
        .equals(&id(&r, &["x^2 - y^2"]))
        .unwrap());
}

#[test]
fn quotients() {
    let r = q(&["x", "y"]);
    assert!(id(&r, &["x^2"])
        .quotient(&id(&r, &["x"]))
        .unwrap()
        .equals(&id(&r, &["x"]))
        .unwrap());
    assert!(id(&r, &["x*y"])
        .quotient(&id(&r, &["x"]))
        .unwrap()
        .equals(&id(&r, &["y"]))
        .unwrap());
    assert!(id(&r, &["x"])
        .quotient(&Ideal::zero(&r))
        .unwrap()
        .is_unit()
        .unwrap());
    let i = id(&r, &["x^2 - y^2"]);
    let qt = i.quotient(&id(&r, &["x - y"])).unwrap();
    assert!(qt.equals(&id(&r, &["x + y"])).unwrap());
}

#[test]
fn saturations() {
    let r = q(&["x", "y"]);
    assert!(id(&r, &["x^2*y"])
        .saturate(&p(&r, "y"))
        .unwrap()
        .equals(&id(&r, &["x^2"]))
        .unwrap());
    assert!(id(&r, &["x"])
        .saturate(&p(&r, "x"))
        .unwrap()
        .is_unit()
        .unwrap());
    assert!(id(&r, &["x"]).saturate(&Polynomial::zero(&r)).is_err());
    // graded fast path agrees with elimination
    let r = q(&["x", "y", "z"]);
    let i = id(&r, &["x^2*y - x*z^2", "x*y^2"]);
    let h = p(&r, "x");
    let fast = i.saturate(&h).unwrap();
    let slow = i.saturate_by_elimination(&h).unwrap();
    assert!(fast.equals(&slow).unwrap());
    // a non-monomial saturating element
    let g = p(&r, "x + y");
    let s = i.saturate(&g).unwrap();
    assert!(s.contains_ideal(&i).unwrap());
}

#[test]
fn elimination() {
    let r = q(&["t", "x", "y"]);
    let i = id(&r, &["x - t^2", "y - t^3"]);
    let e = i.eliminate(&[0]).unwrap();
    assert!(e.equals(&id(&r, &["x^3 - y^2"])).unwrap());
    assert!(i.eliminate(&[]).unwrap().equals(&i).unwrap());
    let j = id(&r, &["t*x - 1", "t*y"]);
    assert!(j.eliminate(&[0]).unwrap().equals(&id(&r, &["y"])).unwrap());
    assert!(i.eliminate(&[7]).is_err());
}

#[test]
fn radical() {
    let r = q(&["x", "y"]);
    assert!(id(&r, &["x^2"]).radical_contains(&p(&r, "x")).unwrap());
    assert!(!id(&r, &["x^2"]).radical_contains(&p(&r, "y")).unwrap());
}

#[test]
fn codimension() {
    let r = q(&["x", "y", "z"]);
    assert_eq!(id(&r, &["x", "y"]).codimension().unwrap(), 2);
    assert_eq!(id(&r, &["x*y", "x*z", "y*z"]).codimension().unwrap(), 2);
    assert!(Ideal::unit(&r).codimension().is_err());
    assert!(Ideal::zero(&r).codimension().is_err());
}

#[test]
fn minimal_generators() {
    let r = q(&["x", "y"]);
    assert!(id(&r, &["x"]).is_minimal_generator(&p(&r, "x")).unwrap());
    assert!(!id(&r, &["x", "y"])
        .is_minimal_generator(&p(&r, "x^2"))
        .unwrap());
    assert_eq!(
        id(&r, &["x"]).is_minimal_generator(&p(&r, "y")),
        Err(AlgebraError::NotInIdeal)
    );
    let m = id(&r, &["x^2", "x", "x*y", "y"])
        .minimal_generators()
        .unwrap();
    assert_eq!(m.gens().len(), 2);
}

#[test]
fn cache_is_shared_across_threads() {
    let r = Ring::<crate::field::Gf>::new(GfKind::new(7).unwrap(), &["x", "y", "z"]).unwrap();
    let i = Ideal::parse(&r, &["x^2 + y*z", "y^2 + x*z", "z^2 + x*y"]).unwrap();
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let i = i.clone();
            std::thread::spawn(move || i.groebner().unwrap())
        })
        .collect();
    let bases: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert!(bases.windows(2).all(|w| Arc::ptr_eq(&w[0], &w[1])));
    assert!(i.cached_groebner().is_some());
}
