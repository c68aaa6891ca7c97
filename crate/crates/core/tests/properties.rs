use proptest::prelude::*;

use f1points::arith::{characters, group_make, reduced_group_ring, FiniteField, PointedAbelianGroup, Ring};
use f1points::chevalley::commutator::{commutator, commutator_rhs};
use f1points::chevalley::{bruhat_decompose, commutator_constants, field_evaluator, invert_e_g, SlnRealization};
use f1points::gadgets::{convolve, CountingPolynomial};
use f1points::roots::parse_root_system;
use f1points::tits::{ExtWeylElement, TitsGroup};
use f1points::weyl::{weyl_enumerate, DEFAULT_WEYL_CAP};

const FIELD_ORDERS: [u32; 8] = [2, 3, 4, 5, 7, 8, 9, 25];

fn pointed_groups() -> Vec<PointedAbelianGroup> {
    ["Z/2:eps=1", "Z/4:eps=2", "Z/6:eps=3", "Z/2xZ/4:eps=(0,2)", "Z/3", "Z/2xZ/2:eps=(1,1)"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

proptest! {
    #[test]
    fn field_axioms(k in 0usize..FIELD_ORDERS.len(), a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let f = FiniteField::of_order(FIELD_ORDERS[k]).unwrap();
        let q = f.order();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        // x^q = x
        prop_assert_eq!(f.pow(&a, q as u64), a);
    }

    #[test]
    fn group_ring_is_commutative_ring(
        k in 0usize..6,
        x in prop::collection::vec(-5i64..=5, 8),
        y in prop::collection::vec(-5i64..=5, 8),
        z in prop::collection::vec(-5i64..=5, 8),
    ) {
        let d = &pointed_groups()[k];
        let r = reduced_group_ring(d);
        let el = |v: &[i64]| r.from_coeffs(v[..r.rank()].to_vec());
        let (x, y, z) = (el(&x), el(&y), el(&z));
        prop_assert_eq!(r.mul(&x, &y), r.mul(&y, &x));
        prop_assert_eq!(r.mul(&r.mul(&x, &y), &z), r.mul(&x, &r.mul(&y, &z)));
        prop_assert_eq!(r.mul(&x, &r.add(&y, &z)), r.add(&r.mul(&x, &y), &r.mul(&x, &z)));
        prop_assert_eq!(r.mul(&x, &r.one()), x);
    }

    #[test]
    fn characters_are_homomorphisms(k in 0usize..6, i in 0usize..64, a in 0usize..64, b in 0usize..64) {
        let d = &pointed_groups()[k];
        let chars = characters(d);
        let expected = if d.is_pointed() { d.order() / 2 } else { d.order() };
        prop_assert_eq!(chars.len(), expected);
        let chi = &chars[i % chars.len()];
        if d.is_pointed() {
            prop_assert_eq!(chi.eval(d.eps()), f1points::arith::RootOfUnity::new(1, 2));
        }
        let (a, b) = (a % d.order(), b % d.order());
        prop_assert_eq!(chi.eval(d.add(a, b)), chi.eval(a).mul(&chi.eval(b)));
    }

    #[test]
    fn weyl_length_properties(k in 0usize..5, word in prop::collection::vec(0usize..3, 0..12)) {
        let rs = parse_root_system(["A2", "B2", "G2", "A3", "B3"][k]).unwrap();
        let w = weyl_enumerate(&rs, DEFAULT_WEYL_CAP).unwrap();
        let word: Vec<usize> = word.into_iter().map(|i| i % rs.rank()).collect();
        let x = w.from_word(&word);
        prop_assert!(w.length(x) <= word.len());
        prop_assert_eq!(w.length(x) % 2, word.len() % 2);
        prop_assert_eq!(w.length(w.inv(x)), w.length(x));
        prop_assert_eq!(w.inversion_set(x).len(), w.length(x));
        let w0 = w.longest_element();
        prop_assert_eq!(w.length(w.mul(x, w0)), rs.num_positive() - w.length(x));
    }

    #[test]
    fn tits_group_axioms(k in 0usize..4, i in 0usize..10_000, j in 0usize..10_000, l in 0usize..10_000) {
        let (name, d) = [("A2", "Z/4:eps=2"), ("B2", "Z/2xZ/2:eps=(1,1)"), ("G2", "Z/6:eps=3"), ("A3:adjoint", "Z/2:eps=1")][k];
        let g = TitsGroup::new(&parse_root_system(name).unwrap(), &d.parse().unwrap()).unwrap();
        let els = g.elements();
        let (a, b, c) = (&els[i % els.len()], &els[j % els.len()], &els[l % els.len()]);
        prop_assert_eq!(g.mul(&g.mul(a, b), c), g.mul(a, &g.mul(b, c)));
        prop_assert_eq!(g.mul(a, b).w, g.weyl().mul(a.w, b.w));
        prop_assert_eq!(g.mul(a, &g.inv(a)), g.identity());
        // the torus is normal: a t a^{-1} = a.w(t)
        let t = g.torus_element(b.t.clone());
        let conj = g.mul(&g.mul(a, &t), &g.inv(a));
        prop_assert_eq!(conj, ExtWeylElement { t: g.act(a.w, &b.t), w: 0 });
    }

    #[test]
    fn polynomial_shift_and_product(
        p in prop::collection::vec(-20i128..=20, 0..6),
        r in prop::collection::vec(-20i128..=20, 0..6),
        c in -5i128..=5,
        x in -6i128..=6,
    ) {
        let p = CountingPolynomial::new(p);
        let r = CountingPolynomial::new(r);
        prop_assert_eq!(p.shift(c).eval(x), p.eval(x + c));
        prop_assert_eq!(p.mul(&r).eval(x), p.eval(x) * r.eval(x));
        prop_assert_eq!(p.add(&r).eval(x), p.eval(x) + r.eval(x));
    }

    #[test]
    fn census_convolution_multiplies_totals(
        a in prop::collection::vec(0u128..100, 1..6),
        b in prop::collection::vec(0u128..100, 1..6),
    ) {
        let c = convolve(&a, &b);
        prop_assert_eq!(c.iter().sum::<u128>(), a.iter().sum::<u128>() * b.iter().sum::<u128>());
        prop_assert_eq!(c.len(), a.len() + b.len() - 1);
    }

    #[test]
    fn bruhat_inverts_e_g(k in 0usize..4, seed in prop::collection::vec(0u32..1000, 8)) {
        let (l, q) = [(1usize, 5u32), (1, 7), (2, 3), (2, 4)][k];
        let rs = parse_root_system(&format!("A{l}")).unwrap();
        let f = FiniteField::of_order(q).unwrap();
        let ev = field_evaluator(&rs, &f).unwrap();
        let tits = ev.tits();
        let els = tits.elements();
        let n = els[seed[0] as usize % els.len()].clone();
        let np = rs.num_positive();
        let a: Vec<u32> = (0..np).map(|i| seed[1 + i] % q).collect();
        let inv = tits.weyl().inversion_set(n.w);
        let b: Vec<u32> = (0..inv.len()).map(|i| seed[4 + i % 4] % q).collect();
        let g = ev.e_g(&a, &n, &b);
        prop_assert_eq!(invert_e_g(&ev, &g).unwrap(), (a, n, b));
        prop_assert_eq!(bruhat_decompose(ev.realization(), &g).unwrap().reconstruct(ev.realization()), g);
    }

    #[test]
    fn commutator_identity_over_f7(t in 0u32..7, u in 0u32..7, r in 0usize..12, s in 0usize..12) {
        let rs = parse_root_system("A3").unwrap();
        let f = FiniteField::of_order(7).unwrap();
        let sl = SlnRealization::from_root_system(&rs, f).unwrap();
        prop_assume!(r != s && s != rs.neg(r));
        let c = commutator_constants(&rs, r, s).unwrap();
        prop_assert_eq!(commutator(&sl, r, s, &t, &u), commutator_rhs(&sl, r, s, &c, &t, &u));
    }
}

#[test]
fn group_make_rejects_eps_of_order_four() {
    assert!(group_make(&[8], &[2]).is_err());
}
