//! The invariant suite behind `f1points verify`.
//!
//! Every check is exact and exhaustive on a desk-scale instance; the suite
//! reports each check separately instead of stopping at the first failure.

use std::collections::{BTreeMap, HashSet};

use crate::arith::{adjunction_check, monoid_of_ring, FiniteField, IntegersMod, PointedAbelianGroup, Ring, RingSpec};
use crate::chevalley::{
    big_cell_factor, bruhat_decompose, commutator_constants, enumerate_group, field_evaluator, group_ring_evaluator,
    invert_e_g, BivariateRing, SlnRealization, DEFAULT_GROUP_BUDGET,
};
use crate::chevalley::commutator::{commutator, commutator_rhs};
use crate::error::Result;
use crate::gadgets::{
    affine_points, binomial, chevalley_census, chevalley_points_monoid, counting_polynomial, proj_points, Variable,
};
use crate::roots::parse_root_system;
use crate::tits::{amalgamated_check, check_laws, TitsGroup};
use crate::weyl::{coxeter_matrix, weyl_enumerate, DEFAULT_WEYL_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Check = (&'static str, fn(u128) -> Result<std::result::Result<String, String>>);

const CHECKS: &[Check] = &[
    ("roots: reflections permute roots, n_r(r) = 2", roots_axioms),
    ("weyl: orders, Coxeter matrices, longest element", weyl_invariants),
    ("tits: extension laws", tits_laws),
    ("tits: generated by the torus and N(Z/2) over D", tits_amalgam),
    ("arith: monoid/ring adjunction", adjunction),
    ("count: chevgroup polynomial = |SL(F_q)|", counting_identity),
    ("count: graded census = P(n)", graded_identity),
    ("count: A^F and P^d binomial census", binomial_census),
    ("chevalley: e_G bijective over F_q", field_bijectivity),
    ("chevalley: e_N injective homomorphism", oracle_equivalence),
    ("chevalley: Bruhat cells", bruhat_cells),
    ("chevalley: big cell census", big_cell),
    ("chevalley: commutator identity", commutator_identity),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs every check; `budget` caps point enumeration.
pub fn run_suite(budget: u128) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .map(|(name, f)| {
            let (passed, detail) = match f(budget) {
                Ok(Ok(d)) => (true, d),
                Ok(Err(d)) => (false, d),
                Err(e) => (false, format!("error: {e}")),
            };
            CheckResult { name: name.to_string(), passed, detail }
        })
        .collect()
}

type Outcome = Result<std::result::Result<String, String>>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($msg)+)));
        }
    };
}

const SYSTEMS: [&str; 8] = ["A1", "A2", "A3", "B2", "C2", "G2", "B3", "A1xA1"];

fn small_groups() -> Vec<PointedAbelianGroup> {
    ["Z/1", "Z/2:eps=1", "Z/2", "Z/3", "Z/4:eps=2", "Z/6:eps=3", "Z/2xZ/2:eps=(1,0)"]
        .iter()
        .map(|s| s.parse().expect("valid group"))
        .collect()
}

fn roots_axioms(_: u128) -> Outcome {
    for name in SYSTEMS {
        for tag in ["", ":adjoint"] {
            let rs = parse_root_system(&format!("{name}{tag}"))?;
            for r in 0..rs.num_roots() {
                ensure!(rs.pairing(r, &rs.root_in_lattice(r)) == 2, "{rs}: n_r(r) != 2 for root {r}");
                for i in 0..rs.rank() {
                    let s = rs.reflect_index(i, r);
                    ensure!(rs.reflect_index(i, s) == r, "{rs}: s_{i} is not an involution");
                }
            }
            ensure!(rs.num_roots() == 2 * rs.num_positive(), "{rs}: root count");
        }
    }
    Ok(Ok(format!("{} root systems, both lattices", SYSTEMS.len())))
}

fn weyl_invariants(_: u128) -> Outcome {
    let expected = [2usize, 6, 24, 8, 8, 12, 48, 4];
    for (name, order) in SYSTEMS.iter().zip(expected) {
        let rs = parse_root_system(name)?;
        let w = weyl_enumerate(&rs, DEFAULT_WEYL_CAP)?;
        ensure!(w.order() == order, "{name}: |W| = {}", w.order());
        ensure!(w.poincare_polynomial().eval(1) == order as i128, "{name}: Poincare polynomial at 1");
        ensure!(w.length(w.longest_element()) == rs.num_positive(), "{name}: l(w0) != N");
        let m = coxeter_matrix(&rs)?;
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                ensure!(m[i][j] == m[j][i] && (m[i][j] == 1) == (i == j), "{name}: Coxeter matrix");
            }
        }
        for x in 0..w.order() {
            for i in 0..rs.rank() {
                let l = w.length(w.mul(x, w.simple(i)));
                ensure!(l.abs_diff(w.length(x)) == 1, "{name}: l(ws) != l(w) +- 1");
            }
        }
    }
    Ok(Ok(format!("{} Weyl groups", SYSTEMS.len())))
}

fn tits_laws(_: u128) -> Outcome {
    let mut cases = 0;
    for name in SYSTEMS {
        for tag in ["", ":adjoint"] {
            let rs = parse_root_system(&format!("{name}{tag}"))?;
            let weyl = weyl_enumerate(&rs, DEFAULT_WEYL_CAP)?;
            for d in small_groups() {
                if d.order().pow(rs.rank() as u32) * weyl.order() > 1000 {
                    continue;
                }
                let g = TitsGroup::from_weyl(weyl.clone(), &d);
                let fails = check_laws(&g)?;
                ensure!(fails.is_empty(), "{rs} over {d}: {} ({})", fails[0].law, fails[0].detail);
                cases += 1;
            }
        }
    }
    Ok(Ok(format!("{cases} (root system, group) pairs with |N| <= 1000")))
}

fn tits_amalgam(_: u128) -> Outcome {
    for name in ["A1", "A2", "B2"] {
        let rs = parse_root_system(name)?;
        for d in ["Z/2:eps=1", "Z/4:eps=2", "Z/2xZ/2:eps=(1,1)"] {
            let d: PointedAbelianGroup = d.parse()?;
            let report = amalgamated_check(&rs, &d)?;
            ensure!(report.holds(), "{name} over {d}: {report:?}");
        }
    }
    Ok(Ok("A1, A2, B2".into()))
}

fn adjunction(_: u128) -> Outcome {
    let mut cases = 0;
    for d in small_groups() {
        for q in [2u32, 3, 4, 5, 7] {
            let report = adjunction_check(&d, &FiniteField::of_order(q)?)?;
            ensure!(report.bijective, "{d} into F_{q}: {report:?}");
            cases += 1;
        }
        for m in [2u64, 4, 6, 9] {
            let report = adjunction_check(&d, &IntegersMod::new(m))?;
            ensure!(report.bijective, "{d} into Z/{m}: {report:?}");
            cases += 1;
        }
    }
    Ok(Ok(format!("{cases} (group, ring) pairs")))
}

fn counting_identity(_: u128) -> Outcome {
    let cases = [(1usize, 2u32, 6usize), (1, 3, 24), (1, 4, 60), (1, 5, 120), (2, 2, 168), (2, 3, 5616)];
    for (l, q, expected) in cases {
        let rs = parse_root_system(&format!("A{l}"))?;
        let poly = counting_polynomial(&rs, Variable::Q)?.eval(q as i128);
        let count = enumerate_group(l, &FiniteField::of_order(q)?, DEFAULT_GROUP_BUDGET)?.len();
        ensure!(poly == count as i128 && count == expected, "SL{}(F{q}): polynomial {poly}, matrices {count}", l + 1);
    }
    Ok(Ok("6, 24, 60, 120, 168, 5616".into()))
}

fn graded_identity(budget: u128) -> Outcome {
    for name in ["A1", "A2", "B2", "G2"] {
        let rs = parse_root_system(name)?;
        let p = counting_polynomial(&rs, Variable::N)?;
        for n in 1..=3u32 {
            let d = PointedAbelianGroup::cyclic_pointed(n)?;
            let (census, _) = chevalley_census(&rs, &d, budget)?;
            let total: u128 = census.iter().sum();
            ensure!(total as i128 == p.eval(n as i128), "{name}, n = {n}: {total} points, P(n) = {}", p.eval(n as i128));
            ensure!(census.iter().position(|&c| c > 0) == Some(rs.rank()), "{name}, n = {n}: lowest degree");
        }
    }
    Ok(Ok("A1, A2, B2, G2 for n <= 3".into()))
}

fn binomial_census(_: u128) -> Outcome {
    for n in 1..=4u32 {
        let d = PointedAbelianGroup::cyclic(n)?;
        let nn = n as u128;
        for f in 0..=4usize {
            let census = affine_points(f, &d).census();
            for (k, &c) in census.iter().enumerate() {
                ensure!(c == binomial(f as u64, k as u64) * nn.pow(k as u32), "A^{f}, n = {n}, degree {k}");
            }
        }
        for dim in 0..=4usize {
            let census = proj_points(dim, &d).census();
            for (k, &c) in census.iter().enumerate() {
                ensure!(c == binomial(dim as u64 + 1, k as u64 + 1) * nn.pow(k as u32), "P^{dim}, n = {n}, degree {k}");
            }
        }
    }
    Ok(Ok("|F|, d <= 4, n <= 4".into()))
}

fn field_bijectivity(budget: u128) -> Outcome {
    for (name, q) in [("A1", 2u32), ("A1", 3), ("A1", 4), ("A2", 2)] {
        let rs = parse_root_system(name)?;
        let f = FiniteField::of_order(q)?;
        let ev = field_evaluator(&rs, &f)?;
        let points = chevalley_points_monoid(&rs, &monoid_of_ring(&RingSpec::Field(f.clone())), budget)?;
        let mut image = HashSet::new();
        for p in &points {
            let a: Vec<u32> = p.a.iter().map(|&x| x as u32).collect();
            let b: Vec<u32> = p.b.iter().map(|&x| x as u32).collect();
            let g = ev.e_g(&a, &p.n, &b);
            let back = invert_e_g(&ev, &g)?;
            ensure!(back == (a, p.n.clone(), b), "{name}/F{q}: e_G is not inverted by the Bruhat factors");
            image.insert(g);
        }
        let group: HashSet<_> = enumerate_group(rs.rank(), &f, DEFAULT_GROUP_BUDGET)?.into_iter().collect();
        ensure!(image == group && points.len() == group.len(), "{name}/F{q}: not a bijection");
    }
    Ok(Ok("A1/F2, A1/F3, A1/F4, A2/F2".into()))
}

fn oracle_equivalence(_: u128) -> Outcome {
    for name in ["A1", "A2"] {
        let rs = parse_root_system(name)?;
        for d in ["Z/2:eps=1", "Z/4:eps=2"] {
            let d: PointedAbelianGroup = d.parse()?;
            let ev = group_ring_evaluator(&rs, &d)?;
            let g = ev.tits();
            let els = g.elements();
            let images: Vec<_> = els.iter().map(|a| ev.e_n(a)).collect();
            ensure!(images.iter().collect::<HashSet<_>>().len() == els.len(), "{name} over {d}: e_N not injective");
            for (i, a) in els.iter().enumerate() {
                for (j, b) in els.iter().enumerate() {
                    let lhs = ev.e_n(&g.mul(a, b));
                    ensure!(lhs == ev.realization().mul(&images[i], &images[j]), "{name} over {d}: e_N not multiplicative");
                }
            }
        }
    }
    Ok(Ok("A1, A2 over Z/2, Z/4".into()))
}

fn bruhat_cells(_: u128) -> Outcome {
    for (l, q) in [(1usize, 3u32), (1, 5), (2, 2)] {
        let f = FiniteField::of_order(q)?;
        let sl = SlnRealization::new(l, f.clone())?;
        let weyl = sl.weyl();
        let mut cells: BTreeMap<usize, usize> = BTreeMap::new();
        for g in enumerate_group(l, &f, DEFAULT_GROUP_BUDGET)? {
            let fac = bruhat_decompose(&sl, &g)?;
            ensure!(fac.reconstruct(&sl) == g, "SL{}(F{q}): factors do not multiply back", l + 1);
            *cells.entry(fac.w).or_default() += 1;
        }
        let (qq, n) = (q as usize, sl.root_system().num_positive() as u32);
        for w in 0..weyl.order() {
            let expected = (qq - 1).pow(l as u32) * qq.pow(n) * qq.pow(weyl.length(w) as u32);
            ensure!(cells.get(&w) == Some(&expected), "SL{}(F{q}): cell of w{w} has {:?}, expected {expected}", l + 1, cells.get(&w));
        }
    }
    Ok(Ok("SL2(F3), SL2(F5), SL3(F2)".into()))
}

fn big_cell(_: u128) -> Outcome {
    for q in [2u32, 3, 5] {
        let f = FiniteField::of_order(q)?;
        let sl = SlnRealization::new(1, f.clone())?;
        let mut count = 0u32;
        for g in enumerate_group(1, &f, DEFAULT_GROUP_BUDGET)? {
            count += u32::from(big_cell_factor(&sl, &g)?.is_some());
        }
        ensure!(count == q * (q - 1) * q, "SL2(F{q}): |big cell| = {count}");
    }
    Ok(Ok("SL2(F2), SL2(F3), SL2(F5)".into()))
}

fn commutator_identity(_: u128) -> Outcome {
    for name in ["A2", "A3"] {
        let rs = parse_root_system(name)?;
        let z = BivariateRing;
        let sym = SlnRealization::from_root_system(&rs, z)?;
        let f3 = FiniteField::of_order(3)?;
        let num = SlnRealization::from_root_system(&rs, f3.clone())?;
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if a == b || b == rs.neg(a) {
                    continue;
                }
                let c = commutator_constants(&rs, a, b)?;
                ensure!(commutator(&sym, a, b, &z.t(), &z.u()) == commutator_rhs(&sym, a, b, &c, &z.t(), &z.u()), "{name}: roots {a}, {b}");
                for t in f3.elements().unwrap_or_default() {
                    for u in f3.elements().unwrap_or_default() {
                        ensure!(commutator(&num, a, b, &t, &u) == commutator_rhs(&num, a, b, &c, &t, &u), "{name} over F3: roots {a}, {b}");
                    }
                }
            }
        }
    }
    Ok(Ok("A2, A3 symbolically and over F3".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let results = run_suite(crate::gadgets::DEFAULT_POINT_BUDGET);
        assert_eq!(results.len(), check_names().len());
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }
}
