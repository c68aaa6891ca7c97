//! Tits' extended Weyl group `N_{D,eps}(L, Phi)`, an extension
//! `1 -> Hom(L, D) -> N -> W -> 1`, in `(t, w)` normal form.
//!
//! `(t, w)` stands for `t * n_w` where `n_w` is the product of the simple
//! lifts `n_i = (0, s_i)` along the stored reduced word of `w`. Products are
//! `(t1, w1)(t2, w2) = (t1 + w1(t2) + c(w1, w2), w1 w2)` with the cocycle
//! obtained by pushing the word of `w2` through `n_{w1}` one letter at a
//! time, using `n_i^2 = h_i`.

use std::collections::{BTreeSet, HashSet};

use crate::arith::group::{GroupElem, GroupHom, PointedAbelianGroup};
use crate::error::{invalid, Error, Result};
use crate::roots::{LatticeMap, RootSystem};
use crate::weyl::{alternating_product, coxeter_matrix, weyl_enumerate, WeylGroup, DEFAULT_WEYL_CAP};

/// `t in Hom(L, D)`, by its values on the basis of `L`.
pub type TorusPoint = Vec<GroupElem>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtWeylElement {
    pub t: TorusPoint,
    pub w: usize,
}

/// Cocycles are tabulated for Weyl groups up to this order.
const COCYCLE_TABLE_LIMIT: usize = 200;

#[derive(Clone, Debug)]
pub struct TitsGroup {
    weyl: WeylGroup,
    d: PointedAbelianGroup,
    h_simple: Vec<TorusPoint>,
    cocycle: Option<Vec<TorusPoint>>,
}

impl TitsGroup {
    pub fn new(rs: &RootSystem, d: &PointedAbelianGroup) -> Result<Self> {
        let weyl = weyl_enumerate(rs, DEFAULT_WEYL_CAP)?;
        Ok(Self::from_weyl(weyl, d))
    }

    pub fn from_weyl(weyl: WeylGroup, d: &PointedAbelianGroup) -> Self {
        let mut g = TitsGroup {
            weyl,
            d: d.clone(),
            h_simple: Vec::new(),
            cocycle: None,
        };
        g.h_simple = (0..g.rank()).map(|i| g.h_root(i)).collect();
        let n = g.weyl.order();
        if n <= COCYCLE_TABLE_LIMIT {
            let mut table = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    table.push(g.compute_cocycle(a, b));
                }
            }
            g.cocycle = Some(table);
        }
        g
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn root_system(&self) -> &RootSystem {
        self.weyl.root_system()
    }

    pub fn group(&self) -> &PointedAbelianGroup {
        &self.d
    }

    pub fn rank(&self) -> usize {
        self.root_system().rank()
    }

    /// `|D|^l |W|`
    pub fn order(&self) -> usize {
        self.torus_order() * self.weyl.order()
    }

    pub fn torus_order(&self) -> usize {
        self.d.order().pow(self.rank() as u32)
    }

    // ---- the torus T = Hom(L, D)

    pub fn torus_zero(&self) -> TorusPoint {
        vec![self.d.zero(); self.rank()]
    }

    pub fn torus_add(&self, a: &TorusPoint, b: &TorusPoint) -> TorusPoint {
        a.iter().zip(b).map(|(&x, &y)| self.d.add(x, y)).collect()
    }

    pub fn torus_neg(&self, a: &TorusPoint) -> TorusPoint {
        a.iter().map(|&x| self.d.neg(x)).collect()
    }

    /// All of `Hom(L, D)`, lexicographically.
    pub fn torus(&self) -> Vec<TorusPoint> {
        let n = self.d.order();
        let l = self.rank();
        (0..self.torus_order())
            .map(|mut k| {
                let mut t = vec![0; l];
                for slot in t.iter_mut().rev() {
                    *slot = k % n;
                    k /= n;
                }
                t
            })
            .collect()
    }

    /// The point `x -> a^{f(x)}` for an integral covector `f`.
    pub fn covector_point(&self, f: &[i64], a: GroupElem) -> TorusPoint {
        f.iter().map(|&k| self.d.scale(a, k)).collect()
    }

    /// `w(t) = t o w^{-1}`.
    pub fn act(&self, w: usize, t: &TorusPoint) -> TorusPoint {
        let m = self.weyl.element(self.weyl.inv(w)).matrix();
        let l = self.rank();
        (0..l)
            .map(|j| {
                (0..l).fold(self.d.zero(), |acc, k| {
                    self.d.add(acc, self.d.scale(t[k], m[k][j]))
                })
            })
            .collect()
    }

    /// `h_r(x) = eps^{n_r(x)}`.
    pub fn h_root(&self, r: usize) -> TorusPoint {
        self.covector_point(self.root_system().coroot_form(r), self.d.eps())
    }

    /// `T_r = {x -> a^{nu(x)} : a in D}` with `nu` the primitive covector
    /// proportional to `n_r`.
    pub fn t_root(&self, r: usize) -> Vec<TorusPoint> {
        let nu = self.root_system().primitive_coroot_form(r);
        let set: BTreeSet<TorusPoint> = self.d.elements().map(|a| self.covector_point(&nu, a)).collect();
        set.into_iter().collect()
    }

    // ---- the extension

    pub fn identity(&self) -> ExtWeylElement {
        ExtWeylElement { t: self.torus_zero(), w: 0 }
    }

    pub fn torus_element(&self, t: TorusPoint) -> ExtWeylElement {
        ExtWeylElement { t, w: 0 }
    }

    /// `n_w = (0, w)`.
    pub fn lift(&self, w: usize) -> ExtWeylElement {
        ExtWeylElement { t: self.torus_zero(), w }
    }

    pub fn simple_lift(&self, i: usize) -> ExtWeylElement {
        self.lift(self.weyl.simple(i))
    }

    fn compute_cocycle(&self, w1: usize, w2: usize) -> TorusPoint {
        let mut c = self.torus_zero();
        let mut cur = w1;
        for &i in self.weyl.element(w2).word() {
            let next = self.weyl.right_simple(cur, i);
            if self.weyl.length(next) < self.weyl.length(cur) {
                c = self.torus_add(&c, &self.act(next, &self.h_simple[i]));
            }
            cur = next;
        }
        c
    }

    /// `c(w1, w2)`, defined by `n_{w1} n_{w2} = c(w1, w2) n_{w1 w2}`.
    pub fn cocycle(&self, w1: usize, w2: usize) -> TorusPoint {
        match &self.cocycle {
            Some(table) => table[w1 * self.weyl.order() + w2].clone(),
            None => self.compute_cocycle(w1, w2),
        }
    }

    pub fn mul(&self, a: &ExtWeylElement, b: &ExtWeylElement) -> ExtWeylElement {
        let t = self.torus_add(&self.torus_add(&a.t, &self.act(a.w, &b.t)), &self.cocycle(a.w, b.w));
        ExtWeylElement { t, w: self.weyl.mul(a.w, b.w) }
    }

    pub fn inv(&self, a: &ExtWeylElement) -> ExtWeylElement {
        let wi = self.weyl.inv(a.w);
        let s = self.torus_add(&a.t, &self.cocycle(a.w, wi));
        ExtWeylElement { t: self.torus_neg(&self.act(wi, &s)), w: wi }
    }

    pub fn pow(&self, a: &ExtWeylElement, e: u64) -> ExtWeylElement {
        (0..e).fold(self.identity(), |acc, _| self.mul(&acc, a))
    }

    pub fn element_order(&self, a: &ExtWeylElement) -> u64 {
        let id = self.identity();
        let mut x = a.clone();
        let mut k = 1;
        while x != id {
            x = self.mul(&x, a);
            k += 1;
        }
        k
    }

    /// `p^{-1}(w) = {(t, w) : t in T}`.
    pub fn fiber(&self, w: usize) -> Vec<ExtWeylElement> {
        self.torus().into_iter().map(|t| ExtWeylElement { t, w }).collect()
    }

    /// Every element, fiber by fiber in Weyl order.
    pub fn elements(&self) -> Vec<ExtWeylElement> {
        (0..self.weyl.order()).flat_map(|w| self.fiber(w)).collect()
    }

    /// A pair `(w, i)` with `w(a_i) = r`, the first in enumeration order.
    fn simple_conjugator(&self, r: usize) -> (usize, usize) {
        let rs = self.root_system();
        let target = if rs.is_positive(r) { r } else { rs.neg(r) };
        for w in 0..self.weyl.order() {
            for i in 0..self.rank() {
                if self.weyl.element(w).apply(i) == target {
                    return (w, i);
                }
            }
        }
        unreachable!("every root is conjugate to a simple root")
    }

    /// A lift of `s_r` of the form `n s_i n^{-1}`, `n` a lift of `w` with
    /// `w(a_i) = +-r`.
    pub fn reflection_lift(&self, r: usize) -> ExtWeylElement {
        let (w, i) = self.simple_conjugator(r);
        let n = self.lift(w);
        self.mul(&self.mul(&n, &self.simple_lift(i)), &self.inv(&n))
    }

    /// `N_r = T_r u T_r a_r`, with `a_r` from [`Self::reflection_lift`].
    pub fn n_root(&self, r: usize) -> Vec<ExtWeylElement> {
        let a = self.reflection_lift(r);
        let ts = self.t_root(r);
        let mut out: Vec<ExtWeylElement> = ts.iter().map(|t| self.torus_element(t.clone())).collect();
        out.extend(ts.iter().map(|t| self.mul(&self.torus_element(t.clone()), &a)));
        out.sort();
        out
    }

    /// `{a in p^{-1}(s_r) : a^2 = h_r}`.
    pub fn square_roots_of_h(&self, r: usize) -> Vec<ExtWeylElement> {
        let h = self.torus_element(self.h_root(r));
        self.fiber(self.weyl.reflection(r))
            .into_iter()
            .filter(|a| self.mul(a, a) == h)
            .collect()
    }

    /// Image of `(t, w)` under the map induced by `f: D -> D'`.
    pub fn map_element(&self, f: &GroupHom, a: &ExtWeylElement) -> ExtWeylElement {
        ExtWeylElement {
            t: a.t.iter().map(|&x| f.apply(x)).collect(),
            w: a.w,
        }
    }

    /// Subgroup generated by the given elements.
    pub fn generated_subgroup(&self, gens: &[ExtWeylElement]) -> HashSet<ExtWeylElement> {
        let mut seen: HashSet<ExtWeylElement> = HashSet::from([self.identity()]);
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.mul(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    pub fn format_element(&self, a: &ExtWeylElement) -> String {
        let t: Vec<String> = a.t.iter().map(|&x| self.d.format_elem(x)).collect();
        let word: Vec<String> = self.weyl.element(a.w).word().iter().map(|i| (i + 1).to_string()).collect();
        format!("([{}], s[{}])", t.join(","), word.join(""))
    }
}

/// `h_s` for the reflection in root `r`.
pub fn h_s(g: &TitsGroup, r: usize) -> TorusPoint {
    g.h_root(r)
}

pub fn t_s(g: &TitsGroup, r: usize) -> Vec<TorusPoint> {
    g.t_root(r)
}

pub fn ext_mult(g: &TitsGroup, a: &ExtWeylElement, b: &ExtWeylElement) -> ExtWeylElement {
    g.mul(a, b)
}

pub fn fiber(g: &TitsGroup, w: usize) -> Vec<ExtWeylElement> {
    g.fiber(w)
}

/// Image of restriction `Hom(L~, D) -> Hom(L, D)` along `phi: L -> L~`.
pub fn restricted_torus(phi: &LatticeMap, d: &PointedAbelianGroup) -> Vec<TorusPoint> {
    let m = phi.matrix();
    let l = m.len();
    let n = d.order();
    let mut out = BTreeSet::new();
    for mut k in 0..n.pow(l as u32) {
        let mut chi = vec![0; l];
        for slot in chi.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        // (chi o phi)(v_j) = sum_k phi[k][j] chi(v~_k)
        let t: TorusPoint = (0..l)
            .map(|j| (0..l).fold(d.zero(), |acc, k| d.add(acc, d.scale(chi[k], m[k][j]))))
            .collect();
        out.insert(t);
    }
    out.into_iter().collect()
}

/// `{(t, w) : t in restricted torus}`.
pub fn restricted_subgroup(g: &TitsGroup, phi: &LatticeMap) -> Vec<ExtWeylElement> {
    let torus = restricted_torus(phi, g.group());
    (0..g.weyl().order())
        .flat_map(|w| torus.iter().map(move |t| ExtWeylElement { t: t.clone(), w }))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmalgamReport {
    pub order: usize,
    pub generated: usize,
    pub functorial_map_is_hom: bool,
}

impl AmalgamReport {
    pub fn holds(&self) -> bool {
        self.order == self.generated && self.functorial_map_is_hom
    }
}

/// Checks that `N_{D,eps}` is generated by `T` and the image of
/// `N_{Z/2,eps}` under the map induced by `Z/2 -> D`, gen -> eps.
pub fn amalgamated_check(rs: &RootSystem, d: &PointedAbelianGroup) -> Result<AmalgamReport> {
    let d0 = PointedAbelianGroup::cyclic_pointed(2)?;
    let f = GroupHom::new(&d0, d, vec![d.eps()])?;
    let weyl = weyl_enumerate(rs, DEFAULT_WEYL_CAP)?;
    let n0 = TitsGroup::from_weyl(weyl.clone(), &d0);
    let n = TitsGroup::from_weyl(weyl, d);
    let image: Vec<ExtWeylElement> = n0.elements().iter().map(|a| n.map_element(&f, a)).collect();
    let functorial_map_is_hom = n0.elements().iter().all(|a| {
        n0.elements().iter().all(|b| {
            n.map_element(&f, &n0.mul(a, b)) == n.mul(&n.map_element(&f, a), &n.map_element(&f, b))
        })
    });
    // torus generators: each factor generator in each slot
    let mut gens = Vec::new();
    for j in 0..n.rank() {
        for k in 0..d.factor_orders().len() {
            let mut t = n.torus_zero();
            t[j] = d.basis(k);
            gens.push(n.torus_element(t));
        }
    }
    gens.extend(image);
    Ok(AmalgamReport {
        order: n.order(),
        generated: n.generated_subgroup(&gens).len(),
        functorial_map_is_hom,
    })
}

/// One failed law, for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawFailure {
    pub law: &'static str,
    pub detail: String,
}

/// Exhaustive check of the extension laws; returns every failure found.
pub fn check_laws(g: &TitsGroup) -> Result<Vec<LawFailure>> {
    let mut fails = Vec::new();
    let mut fail = |law: &'static str, detail: String| fails.push(LawFailure { law, detail });
    let rs = g.root_system().clone();
    let weyl = g.weyl();
    let torus = g.torus();
    let elements = g.elements();
    let nr = rs.num_roots();

    // (n1): Ker p is abelian and carries the torus law
    for a in &torus {
        for b in &torus {
            let x = g.mul(&g.torus_element(a.clone()), &g.torus_element(b.clone()));
            if x != g.torus_element(g.torus_add(a, b)) {
                fail("n1", format!("torus product {a:?} {b:?}"));
            }
        }
    }
    // p is a homomorphism and the product is associative; large groups are
    // sampled on the outer factors
    let exhaustive = elements.len() <= 1000;
    let step = if exhaustive { 1 } else { (elements.len() / 40).max(1) };
    for (k, a) in elements.iter().enumerate() {
        if k % step == 0 {
            for b in &elements {
                if g.mul(a, b).w != weyl.mul(a.w, b.w) {
                    fail("p-hom", format!("{a:?} {b:?}"));
                }
            }
        }
        if g.mul(a, &g.inv(a)) != g.identity() || g.mul(&g.inv(a), a) != g.identity() {
            fail("inverse", format!("{a:?}"));
        }
    }
    let step = (elements.len() / 12).max(1);
    for a in elements.iter().step_by(step) {
        for b in &elements {
            for c in elements.iter().step_by(step) {
                if g.mul(&g.mul(a, b), c) != g.mul(a, &g.mul(b, c)) {
                    fail("associativity", format!("{a:?} {b:?} {c:?}"));
                }
            }
        }
    }

    let reflections: Vec<usize> = rs.positive_roots().collect();
    let n_sets: Vec<BTreeSet<ExtWeylElement>> =
        (0..nr).map(|r| g.n_root(r).into_iter().collect()).collect();
    for &r in &reflections {
        let s = weyl.reflection(r);
        let h = g.h_root(r);
        let ts: BTreeSet<TorusPoint> = g.t_root(r).into_iter().collect();
        // (3) h_s in T_s, and h_s = h_{-s}
        if !ts.contains(&h) {
            fail("(3)", format!("root {r}"));
        }
        if h != g.h_root(rs.neg(r)) {
            fail("h_s = h_-s", format!("root {r}"));
        }
        if g.torus_add(&h, &h) != g.torus_zero() {
            fail("h_s^2", format!("root {r}"));
        }
        // (4) s(t) t^{-1} in T_s; (5) s(t) = t^{-1} on T_s
        for t in &torus {
            if !ts.contains(&g.torus_add(&g.act(s, t), &g.torus_neg(t))) {
                fail("(4)", format!("root {r}, t {t:?}"));
            }
        }
        for t in &ts {
            if g.act(s, t) != g.torus_neg(t) {
                fail("(5)", format!("root {r}, t {t:?}"));
            }
        }
        // (1), (2): w(T_s) = T_{w(s)}, w(h_s) = h_{w(s)}
        for w in 0..weyl.order() {
            let wr = weyl.element(w).apply(r);
            let img: BTreeSet<TorusPoint> = ts.iter().map(|t| g.act(w, t)).collect();
            let target: BTreeSet<TorusPoint> = g.t_root(wr).into_iter().collect();
            if img != target {
                fail("(1)", format!("root {r}, w {w}"));
            }
            if g.act(w, &h) != g.h_root(wr) {
                fail("(2)", format!("root {r}, w {w}"));
            }
        }
        // (n3): p(N_s) = {1, s}; every a in N_s \ T_s squares to h_s
        let ns = &n_sets[r];
        let images: BTreeSet<usize> = ns.iter().map(|a| a.w).collect();
        if images != BTreeSet::from([0, s]) {
            fail("n3", format!("root {r}"));
        }
        let hs = g.torus_element(h.clone());
        for a in ns.iter().filter(|a| a.w == s) {
            if g.mul(a, a) != hs {
                fail("a^2 = h_s", format!("root {r}, a {a:?}"));
            }
        }
        // N_s is a subgroup
        for a in ns {
            for b in ns {
                if !ns.contains(&g.mul(a, b)) {
                    fail("N_s subgroup", format!("root {r}"));
                }
            }
        }
    }
    // (n2): n N_s n^{-1} = N_{w(s)}
    for n in &elements {
        let ninv = g.inv(n);
        for &r in &reflections {
            let wr = weyl.element(n.w).apply(r);
            let conj: BTreeSet<ExtWeylElement> =
                n_sets[r].iter().map(|a| g.mul(&g.mul(n, a), &ninv)).collect();
            if conj != n_sets[wr] {
                fail("n2", format!("n {n:?}, root {r}"));
            }
        }
    }
    // braid relations on lifts in N_{s_i} \ T
    let m = coxeter_matrix(&rs)?;
    for i in 0..rs.rank() {
        for j in i + 1..rs.rank() {
            let lifts_i: Vec<_> = n_sets[i].iter().filter(|a| a.w != 0).collect();
            let lifts_j: Vec<_> = n_sets[j].iter().filter(|a| a.w != 0).collect();
            for a in &lifts_i {
                for b in &lifts_j {
                    let lhs = alternating(g, m[i][j], a, b);
                    let rhs = alternating(g, m[i][j], b, a);
                    if lhs != rhs {
                        fail("braid", format!("({i},{j}) {a:?} {b:?}"));
                    }
                }
            }
            if alternating_product(weyl, m[i][j], weyl.simple(i), weyl.simple(j))
                != alternating_product(weyl, m[i][j], weyl.simple(j), weyl.simple(i))
            {
                fail("braid (W)", format!("({i},{j})"));
            }
        }
    }
    // reduced-word independence
    for w in 0..weyl.order() {
        for word in weyl.reduced_words(w) {
            let prod = word
                .iter()
                .fold(g.identity(), |acc, &i| g.mul(&acc, &g.simple_lift(i)));
            if prod != g.lift(w) {
                fail("word independence", format!("w {w}, word {word:?}"));
            }
        }
    }
    Ok(fails)
}

fn alternating(g: &TitsGroup, m: u32, a: &ExtWeylElement, b: &ExtWeylElement) -> ExtWeylElement {
    (0..m).fold(g.identity(), |acc, k| g.mul(&acc, if k % 2 == 0 { a } else { b }))
}

/// Checks that `f: D -> D'` induces a homomorphism `N_{D,eps} -> N_{D',eps'}`
/// over `W`.
pub fn functorial_map_check(rs: &RootSystem, f: &GroupHom) -> Result<bool> {
    if !f.preserves_eps() {
        return invalid("the group map must send eps to eps");
    }
    let weyl = weyl_enumerate(rs, DEFAULT_WEYL_CAP)?;
    let src = TitsGroup::from_weyl(weyl.clone(), f.source());
    let dst = TitsGroup::from_weyl(weyl, f.target());
    let els = src.elements();
    Ok(els.iter().all(|a| {
        let fa = dst.map_element(f, a);
        fa.w == a.w
            && els.iter().all(|b| {
                dst.map_element(f, &src.mul(a, b)) == dst.mul(&fa, &dst.map_element(f, b))
            })
    }))
}

/// Rejects `D` too large for exhaustive sweeps.
pub fn ensure_small(g: &TitsGroup, limit: usize) -> Result<()> {
    if g.order() > limit {
        return Err(Error::BudgetExceeded {
            needed: g.order() as u128,
            budget: limit as u128,
        });
    }
    Ok(())
}
