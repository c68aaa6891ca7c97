//! Gadgets behind one trait, selected by name.

use std::collections::BTreeMap;

use super::chevalley::{chevalley_census, chevalley_points, chevalley_polynomial, GPoint};
use super::graded::GradedSet;
use super::points::{affine_points, affine_polynomial, e_f, gm_points, gm_polynomial, proj_points, proj_polynomial, spec_points, AffinePoint};
use super::polynomial::CountingPolynomial;
use crate::arith::character::{Character, RootOfUnity};
use crate::arith::cyclotomic::CycloElem;
use crate::arith::group::{GroupElem, GroupHom, PointedAbelianGroup};
use crate::chevalley::character_evaluator;
use crate::error::{Error, Result};
use crate::roots::RootSystem;
use crate::weyl::{weyl_enumerate, DEFAULT_WEYL_CAP};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GadgetPoint {
    Hom(GroupHom),
    Unit(GroupElem),
    Coords(AffinePoint),
    Chevalley(GPoint),
}

/// The value of `e_X(chi)` at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Values(Vec<Option<RootOfUnity>>),
    Matrix(Vec<Vec<CycloElem>>),
}

pub trait Gadget {
    fn name(&self) -> String;

    /// Label of the formula behind the counting polynomial.
    fn formula(&self) -> &'static str;

    /// `N(q)`, when the point count is polynomial.
    fn counting_polynomial(&self) -> Option<CountingPolynomial>;

    fn points(&self, d: &PointedAbelianGroup, budget: u128) -> Result<GradedSet<GadgetPoint>>;

    fn census(&self, d: &PointedAbelianGroup, budget: u128) -> Result<Vec<u128>> {
        Ok(self.points(d, budget)?.census())
    }

    /// `X(f)` for `f: D -> D'`.
    fn map_point(&self, f: &GroupHom, x: &GadgetPoint) -> Result<GadgetPoint>;

    /// `e_X(chi)(x)`, with matrix entries in `Z[zeta_m]`.
    fn evaluate(&self, chi: &Character, m: u64, x: &GadgetPoint) -> Result<Evaluation>;
}

fn wrong_point(name: &str) -> Error {
    Error::Invalid(format!("point does not belong to {name}"))
}

fn map_coords(f: &GroupHom, x: &[Option<GroupElem>]) -> AffinePoint {
    x.iter().map(|c| c.map(|g| f.apply(g))).collect()
}

fn within_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

pub struct SpecGadget {
    pub source: PointedAbelianGroup,
}

impl Gadget for SpecGadget {
    fn name(&self) -> String {
        format!("Spec {}", self.source)
    }

    fn formula(&self) -> &'static str {
        "brute-force"
    }

    fn counting_polynomial(&self) -> Option<CountingPolynomial> {
        None
    }

    fn points(&self, d: &PointedAbelianGroup, _budget: u128) -> Result<GradedSet<GadgetPoint>> {
        Ok(spec_points(&self.source, d).map(GadgetPoint::Hom))
    }

    fn map_point(&self, f: &GroupHom, x: &GadgetPoint) -> Result<GadgetPoint> {
        match x {
            GadgetPoint::Hom(h) => Ok(GadgetPoint::Hom(h.compose(f)?)),
            _ => Err(wrong_point("Spec")),
        }
    }

    /// `chi o phi` as its list of values on the source group.
    fn evaluate(&self, chi: &Character, _m: u64, x: &GadgetPoint) -> Result<Evaluation> {
        match x {
            GadgetPoint::Hom(h) => Ok(Evaluation::Values(
                h.source().elements().map(|g| Some(chi.eval(h.apply(g)))).collect(),
            )),
            _ => Err(wrong_point("Spec")),
        }
    }
}

pub struct GmGadget;

impl Gadget for GmGadget {
    fn name(&self) -> String {
        "G_m".into()
    }

    fn formula(&self) -> &'static str {
        "binomial"
    }

    fn counting_polynomial(&self) -> Option<CountingPolynomial> {
        Some(gm_polynomial())
    }

    fn points(&self, d: &PointedAbelianGroup, _budget: u128) -> Result<GradedSet<GadgetPoint>> {
        Ok(gm_points(d).map(GadgetPoint::Unit))
    }

    fn map_point(&self, f: &GroupHom, x: &GadgetPoint) -> Result<GadgetPoint> {
        match x {
            GadgetPoint::Unit(g) => Ok(GadgetPoint::Unit(f.apply(*g))),
            _ => Err(wrong_point("G_m")),
        }
    }

    fn evaluate(&self, chi: &Character, _m: u64, x: &GadgetPoint) -> Result<Evaluation> {
        match x {
            GadgetPoint::Unit(g) => Ok(Evaluation::Values(vec![Some(chi.eval(*g))])),
            _ => Err(wrong_point("G_m")),
        }
    }
}

pub struct AffineGadget {
    pub size: usize,
}

impl Gadget for AffineGadget {
    fn name(&self) -> String {
        format!("A^{}", self.size)
    }

    fn formula(&self) -> &'static str {
        "binomial"
    }

    fn counting_polynomial(&self) -> Option<CountingPolynomial> {
        Some(affine_polynomial(self.size))
    }

    fn points(&self, d: &PointedAbelianGroup, budget: u128) -> Result<GradedSet<GadgetPoint>> {
        within_budget((d.order() as u128 + 1).pow(self.size as u32), budget)?;
        Ok(affine_points(self.size, d).map(GadgetPoint::Coords))
    }

    fn map_point(&self, f: &GroupHom, x: &GadgetPoint) -> Result<GadgetPoint> {
        match x {
            GadgetPoint::Coords(c) => Ok(GadgetPoint::Coords(map_coords(f, c))),
            _ => Err(wrong_point("A^F")),
        }
    }

    fn evaluate(&self, chi: &Character, _m: u64, x: &GadgetPoint) -> Result<Evaluation> {
        match x {
            GadgetPoint::Coords(c) => Ok(Evaluation::Values(e_f(chi, c))),
            _ => Err(wrong_point("A^F")),
        }
    }
}

pub struct ProjectiveGadget {
    pub dim: usize,
}

impl Gadget for ProjectiveGadget {
    fn name(&self) -> String {
        format!("P^{}", self.dim)
    }

    fn formula(&self) -> &'static str {
        "binomial"
    }

    fn counting_polynomial(&self) -> Option<CountingPolynomial> {
        Some(proj_polynomial(self.dim))
    }

    fn points(&self, d: &PointedAbelianGroup, budget: u128) -> Result<GradedSet<GadgetPoint>> {
        within_budget((d.order() as u128 + 1).pow(self.dim as u32 + 1), budget)?;
        Ok(proj_points(self.dim, d).map(GadgetPoint::Coords))
    }

    /// Homomorphisms fix the identity, so normalized points stay normalized.
    fn map_point(&self, f: &GroupHom, x: &GadgetPoint) -> Result<GadgetPoint> {
        match x {
            GadgetPoint::Coords(c) => Ok(GadgetPoint::Coords(map_coords(f, c))),
            _ => Err(wrong_point("P^d")),
        }
    }

    fn evaluate(&self, chi: &Character, _m: u64, x: &GadgetPoint) -> Result<Evaluation> {
        match x {
            GadgetPoint::Coords(c) => Ok(Evaluation::Values(e_f(chi, c))),
            _ => Err(wrong_point("P^d")),
        }
    }
}

pub struct ChevalleyGadget {
    pub root_system: RootSystem,
}

impl Gadget for ChevalleyGadget {
    fn name(&self) -> String {
        format!("G({})", self.root_system)
    }

    fn formula(&self) -> &'static str {
        "chevgroup"
    }

    fn counting_polynomial(&self) -> Option<CountingPolynomial> {
        weyl_enumerate(&self.root_system, DEFAULT_WEYL_CAP)
            .ok()
            .map(|w| chevalley_polynomial(&w))
    }

    fn points(&self, d: &PointedAbelianGroup, budget: u128) -> Result<GradedSet<GadgetPoint>> {
        Ok(chevalley_points(&self.root_system, d, budget)?.map(GadgetPoint::Chevalley))
    }

    fn census(&self, d: &PointedAbelianGroup, budget: u128) -> Result<Vec<u128>> {
        Ok(chevalley_census(&self.root_system, d, budget)?.0)
    }

    fn map_point(&self, f: &GroupHom, x: &GadgetPoint) -> Result<GadgetPoint> {
        match x {
            GadgetPoint::Chevalley(p) => Ok(GadgetPoint::Chevalley(GPoint {
                a: map_coords(f, &p.a),
                n: crate::tits::ExtWeylElement {
                    t: p.n.t.iter().map(|&x| f.apply(x)).collect(),
                    w: p.n.w,
                },
                b: map_coords(f, &p.b),
            })),
            _ => Err(wrong_point("G")),
        }
    }

    fn evaluate(&self, chi: &Character, m: u64, x: &GadgetPoint) -> Result<Evaluation> {
        match x {
            GadgetPoint::Chevalley(p) => {
                let ev = character_evaluator(&self.root_system, chi, m)?;
                Ok(Evaluation::Matrix(ev.e_g_graded(&p.a, &p.n, &p.b)))
            }
            _ => Err(wrong_point("G")),
        }
    }
}

/// Construction parameters; each gadget reads what it needs.
#[derive(Clone, Debug, Default)]
pub struct GadgetParams {
    pub root_system: Option<RootSystem>,
    pub dim: Option<usize>,
    pub source: Option<PointedAbelianGroup>,
}

pub type GadgetBuilder = fn(&GadgetParams) -> Result<Box<dyn Gadget>>;

fn require<T: Clone>(x: &Option<T>, what: &str, gadget: &str) -> Result<T> {
    x.clone()
        .ok_or_else(|| Error::Invalid(format!("gadget '{gadget}' needs {what}")))
}

fn build_spec(p: &GadgetParams) -> Result<Box<dyn Gadget>> {
    Ok(Box::new(SpecGadget { source: require(&p.source, "a source group", "spec")? }))
}

fn build_gm(_: &GadgetParams) -> Result<Box<dyn Gadget>> {
    Ok(Box::new(GmGadget))
}

fn build_affine(p: &GadgetParams) -> Result<Box<dyn Gadget>> {
    Ok(Box::new(AffineGadget { size: require(&p.dim, "a dimension", "affine")? }))
}

fn build_proj(p: &GadgetParams) -> Result<Box<dyn Gadget>> {
    Ok(Box::new(ProjectiveGadget { dim: require(&p.dim, "a dimension", "pd")? }))
}

fn build_chevalley(p: &GadgetParams) -> Result<Box<dyn Gadget>> {
    Ok(Box::new(ChevalleyGadget {
        root_system: require(&p.root_system, "a root system", "chevalley")?,
    }))
}

pub struct GadgetRegistry {
    builders: BTreeMap<String, GadgetBuilder>,
    aliases: BTreeMap<String, String>,
}

impl Default for GadgetRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

impl GadgetRegistry {
    pub fn empty() -> Self {
        GadgetRegistry { builders: BTreeMap::new(), aliases: BTreeMap::new() }
    }

    pub fn with_builtins() -> Self {
        let mut reg = Self::empty();
        reg.register("spec", build_spec);
        reg.register("gm", build_gm);
        reg.register("affine", build_affine);
        reg.register("pd", build_proj);
        reg.register("chevalley", build_chevalley);
        reg.alias("af", "affine");
        reg.alias("proj", "pd");
        reg
    }

    pub fn register(&mut self, name: &str, builder: GadgetBuilder) {
        self.builders.insert(name.to_string(), builder);
    }

    pub fn alias(&mut self, alias: &str, name: &str) {
        self.aliases.insert(alias.to_string(), name.to_string());
    }

    pub fn names(&self) -> Vec<&str> {
        self.builders.keys().map(String::as_str).collect()
    }

    pub fn build(&self, name: &str, params: &GadgetParams) -> Result<Box<dyn Gadget>> {
        let key = self.aliases.get(name).map_or(name, String::as_str);
        let builder = self.builders.get(key).ok_or_else(|| {
            Error::Parse(format!("unknown gadget '{name}' (known: {})", self.names().join(", ")))
        })?;
        builder(params)
    }
}

/// Checks `e_X(chi' o f) = e_X(chi') o X(f)` on every point of `X(D)`.
pub fn naturality_check(gadget: &dyn Gadget, f: &GroupHom, chi_target: &Character, budget: u128) -> Result<bool> {
    let chi_source = chi_target.pullback(f)?;
    let m = num_integer::lcm(f.source().exponent().max(1), f.target().exponent().max(1));
    for (_, x) in gadget.points(f.source(), budget)?.iter() {
        let lhs = gadget.evaluate(&chi_source, m, x)?;
        let rhs = gadget.evaluate(chi_target, m, &gadget.map_point(f, x)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
