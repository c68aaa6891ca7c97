use std::collections::BTreeMap;

use anyhow::{Context, Result};
use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use f1points::arith::{
    characters, monoid_of_ring, FiniteField, PointedAbelianGroup, ReducedGroupRing, Ring, RingSpec,
};
use f1points::chevalley::{
    bruhat_decompose, character_evaluator, enumerate_group, group_ring_evaluator, RingMatrix,
    SlnRealization, DEFAULT_GROUP_BUDGET,
};
use f1points::gadgets::{chevalley_census, chevalley_points, chevalley_points_monoid, CensusMethod, GadgetParams, GadgetRegistry};
use f1points::roots::{parse_root_system, RootSystem};
use f1points::tits::{check_laws, TitsGroup};
use f1points::verify::run_suite;
use f1points::weyl::{weyl_enumerate, WeylGroup, DEFAULT_WEYL_CAP};

use crate::output::{Format, Table};
use crate::{Outcome, TypeArg, UsageError};

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn root_system(ty: Option<&str>) -> Result<RootSystem> {
    let spec = ty.ok_or_else(|| usage("a root system is required (e.g. --type A2)"))?;
    Ok(parse_root_system(spec)?)
}

fn group(spec: &str) -> Result<PointedAbelianGroup> {
    Ok(spec.parse::<PointedAbelianGroup>()?)
}

fn table(t: &Table, format: Format) -> Result<Outcome> {
    Ok(Outcome { text: t.render(format)?, ok: true })
}

fn word_json(weyl: &WeylGroup, w: usize) -> Value {
    json!(weyl.element(w).word().iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn word_text(weyl: &WeylGroup, w: usize) -> String {
    let word = weyl.element(w).word();
    if word.is_empty() {
        "1".into()
    } else {
        word.iter().map(|i| format!("s{}", i + 1)).collect()
    }
}

pub fn roots(ty: &TypeArg, format: Format) -> Result<Outcome> {
    let rs = root_system(ty.get())?;
    let mut t = Table::new("reflection-closure", &["index", "root", "lattice", "height", "coroot_form"]);
    t.note("root system", rs.to_string());
    t.note("roots", rs.num_roots().to_string());
    for r in 0..rs.num_roots() {
        t.push(vec![
            json!(r),
            json!(rs.root(r)),
            json!(rs.root_in_lattice(r)),
            json!(rs.height(r)),
            json!(rs.coroot_form(r)),
        ]);
    }
    table(&t, format)
}

pub fn weyl(ty: &TypeArg, format: Format) -> Result<Outcome> {
    let rs = root_system(ty.get())?;
    let w = weyl_enumerate(&rs, DEFAULT_WEYL_CAP)?;
    let mut t = Table::new("poincare", &["word", "length", "inversions"]);
    t.note("order", w.order().to_string());
    t.note("poincare polynomial", w.poincare_polynomial().to_string());
    for x in 0..w.order() {
        let inv: Vec<&[i64]> = w.inversion_set(x).into_iter().map(|r| rs.root(r)).collect();
        t.push(vec![word_json(&w, x), json!(w.length(x)), json!(inv)]);
    }
    table(&t, format)
}

#[derive(Args, Debug)]
pub struct TitsArgs {
    #[command(flatten)]
    ty: TypeArg,

    /// The pointed group (D, eps), e.g. Z/4:eps=2 or Z/2xZ/4:eps=(0,2).
    #[arg(long, default_value = "Z/2:eps=1")]
    group: String,

    /// Print a digest of the multiplication table as JSON.
    #[arg(long)]
    table: bool,

    /// Run the extension laws instead of listing elements.
    #[arg(long, conflicts_with = "table")]
    laws: bool,
}

/// FNV-1a over a stream of indices; stable across platforms and releases.
fn fnv1a(values: impl Iterator<Item = usize>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for v in values {
        for b in (v as u64).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

pub fn tits(args: &TitsArgs, format: Format, budget: u128) -> Result<Outcome> {
    let rs = root_system(args.ty.get())?;
    let d = group(&args.group)?;
    let g = TitsGroup::new(&rs, &d)?;
    let n = g.order() as u128;
    if n > budget {
        return Err(f1points::Error::BudgetExceeded { needed: n, budget }.into());
    }
    if args.laws {
        let fails = check_laws(&g)?;
        let mut t = Table::new("cocycle", &["law", "detail"]);
        t.note("group", format!("N over {d}, {rs}"));
        t.note("failures", fails.len().to_string());
        for f in &fails {
            t.push(vec![json!(f.law), json!(f.detail)]);
        }
        return Ok(Outcome { text: t.render(format)?, ok: fails.is_empty() });
    }
    let els = g.elements();
    if args.table {
        if n * n > budget {
            return Err(f1points::Error::BudgetExceeded { needed: n * n, budget }.into());
        }
        let index: BTreeMap<_, _> = els.iter().cloned().zip(0usize..).collect();
        let products: Vec<usize> =
            els.iter().flat_map(|a| els.iter().map(|b| index[&g.mul(a, b)]).collect::<Vec<_>>()).collect();
        let k = els.len();
        let center = (0..k).filter(|&i| (0..k).all(|j| products[i * k + j] == products[j * k + i])).count();
        let mut orders: BTreeMap<u64, usize> = BTreeMap::new();
        for a in &els {
            *orders.entry(g.element_order(a)).or_default() += 1;
        }
        let digest = json!({
            "root_system": rs.to_string(),
            "group": d.to_string(),
            "order": k,
            "torus_order": g.torus_order(),
            "weyl_order": g.weyl().order(),
            "center_order": center,
            "element_orders": orders.iter().map(|(o, c)| (o.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
            "table_fnv1a": format!("{:016x}", fnv1a(products.into_iter())),
        });
        return Ok(Outcome { text: serde_json::to_string_pretty(&digest)? + "\n", ok: true });
    }
    let mut t = Table::new("cocycle", &["index", "element", "w", "length", "order"]);
    t.note("group", format!("N over {d}, {rs}"));
    t.note("order", format!("{} = {} x {}", els.len(), g.torus_order(), g.weyl().order()));
    for (i, a) in els.iter().enumerate() {
        t.push(vec![
            json!(i),
            json!(g.format_element(a)),
            json!(word_text(g.weyl(), a.w)),
            json!(g.weyl().length(a.w)),
            json!(g.element_order(a)),
        ]);
    }
    table(&t, format)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EpsChoice {
    /// eps = n/2 for even n, trivial for odd n.
    Auto,
    /// Always trivial.
    Plain,
    /// eps = n/2; refused for odd n.
    Half,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    /// Gadget name: chevalley, pd (proj), affine (af), gm, spec.
    #[arg(long, default_value = "chevalley")]
    gadget: String,

    #[command(flatten)]
    ty: TypeArg,

    /// Dimension for pd and affine.
    #[arg(long)]
    d: Option<usize>,

    /// n or an inclusive range a..b; D = Z/n.
    #[arg(long, default_value = "1")]
    n: String,

    /// Designated element of Z/n.
    #[arg(long, value_enum, default_value = "auto")]
    eps: EpsChoice,

    /// Count over this pointed group instead of Z/n.
    #[arg(long, conflicts_with_all = ["n", "monoid"])]
    group: Option<String>,

    /// Source group D0 of the spec gadget.
    #[arg(long)]
    source: Option<String>,

    /// Count the monoid functor over F_q (Fq or GF(q)) or Z/m (chevalley only).
    #[arg(long)]
    monoid: Option<String>,
}

pub fn parse_range(spec: &str) -> Result<Vec<u32>> {
    let bad = || usage(format!("bad --n {spec:?}: expected n or a..b"));
    let parse = |s: &str| s.trim().parse::<u32>().ok().filter(|&n| n >= 1).ok_or_else(bad);
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let n = parse(spec)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn pointed_cyclic(n: u32, eps: EpsChoice) -> Result<PointedAbelianGroup> {
    Ok(match eps {
        EpsChoice::Auto => PointedAbelianGroup::cyclic_pointed(n)?,
        EpsChoice::Plain => PointedAbelianGroup::cyclic(n)?,
        EpsChoice::Half if n % 2 == 1 => {
            return Err(usage(format!("Z/{n} has no element of order two; use --eps plain or auto")))
        }
        EpsChoice::Half => PointedAbelianGroup::cyclic_pointed(n)?,
    })
}

/// Brute-force `|X(F_q)|` for the gadgets that have one.
fn brute_force(gadget: &str, params: &GadgetParams, q: u32) -> Result<Option<u128>> {
    let Ok(f) = FiniteField::of_order(q) else { return Ok(None) };
    let pow = |k: usize| (q as u128).checked_pow(k as u32).filter(|&c| c <= DEFAULT_GROUP_BUDGET);
    Ok(match gadget {
        "chevalley" => {
            let rs = params.root_system.as_ref().expect("root system");
            if rs.diagonal_characters().is_none() {
                return Ok(None);
            }
            match enumerate_group(rs.rank(), &f, DEFAULT_GROUP_BUDGET) {
                Ok(g) => Some(g.len() as u128),
                Err(f1points::Error::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            }
        }
        "gm" => Some(f.elements().unwrap_or_default().iter().filter(|x| f.inv(x).is_some()).count() as u128),
        "affine" | "pd" => {
            let dim = params.dim.unwrap_or(0);
            let len = if gadget == "pd" { dim + 1 } else { dim };
            let Some(total) = pow(len) else { return Ok(None) };
            let mut count = 0u128;
            for code in 0..total {
                let mut x = code;
                let mut first_nonzero = None;
                for _ in 0..len {
                    let c = (x % q as u128) as u32;
                    x /= q as u128;
                    if c != 0 && first_nonzero.is_none() {
                        first_nonzero = Some(c);
                    }
                }
                // a projective point is counted once, by its representative
                // whose first non-zero coordinate is 1
                count += u128::from(gadget == "affine" || first_nonzero == Some(1));
            }
            Some(count)
        }
        _ => None,
    })
}

/// `None` when there is nothing to compare against.
fn compare(expected: Option<i128>, brute: Option<u128>, points: u128) -> Option<bool> {
    if expected.is_none() && brute.is_none() {
        return None;
    }
    Some(expected.map_or(true, |e| e == points as i128) && brute.map_or(true, |b| b == points))
}

pub fn count(args: &CountArgs, format: Format, budget: u128) -> Result<Outcome> {
    let registry = GadgetRegistry::with_builtins();
    let canonical = match args.gadget.as_str() {
        "proj" => "pd",
        "af" => "affine",
        other => other,
    };
    let params = GadgetParams {
        root_system: args.ty.get().map(parse_root_system).transpose()?,
        dim: args.d,
        source: args.source.as_deref().map(group).transpose()?,
    };
    let gadget = registry.build(&args.gadget, &params)?;
    if let Some(m) = &args.monoid {
        return count_monoid(&params, m, format, budget);
    }
    let poly = gadget.counting_polynomial();
    let mut t = Table::new(
        gadget.formula(),
        &["n", "group", "q", "points", "polynomial", "brute_force", "match", "method", "census"],
    );
    t.note("gadget", gadget.name());
    if let Some(p) = &poly {
        t.note("N(q)", p.to_string());
    }
    let groups: Vec<PointedAbelianGroup> = match &args.group {
        Some(g) => vec![group(g)?],
        None => parse_range(&args.n)?.into_iter().map(|n| pointed_cyclic(n, args.eps)).collect::<Result<_>>()?,
    };
    let mut all_match = true;
    for d in groups {
        let q = d.order() as u32 + 1;
        let (census, method) = if canonical == "chevalley" {
            let rs = params.root_system.as_ref().expect("built above");
            let (c, m) = chevalley_census(rs, &d, budget)?;
            (c, if m == CensusMethod::Structural { "structural" } else { "enumerated" })
        } else {
            (gadget.census(&d, budget)?, "enumerated")
        };
        let points: u128 = census.iter().sum();
        let expected = poly.as_ref().map(|p| p.eval(q as i128));
        let brute = brute_force(canonical, &params, q)?;
        let matches = compare(expected, brute, points);
        all_match &= matches != Some(false);
        t.push(vec![
            json!(d.order()),
            json!(d.to_string()),
            json!(q),
            json!(points as u64),
            expected.map_or(Value::Null, |e| json!(e as i64)),
            brute.map_or(Value::Null, |b| json!(b as u64)),
            json!(matches),
            json!(method),
            json!(census.iter().map(|&c| c as u64).collect::<Vec<_>>()),
        ]);
    }
    Ok(Outcome { text: t.render(format)?, ok: all_match })
}

fn parse_monoid(spec: &str) -> Result<(RingSpec, Option<u32>)> {
    let s = spec.trim();
    if let Some(q) = s.strip_prefix("GF(").and_then(|x| x.strip_suffix(')')).or_else(|| s.strip_prefix('F')) {
        let q: u32 = q.parse().map_err(|_| usage(format!("bad monoid {spec:?}")))?;
        return Ok((RingSpec::Field(FiniteField::of_order(q)?), Some(q)));
    }
    if let Some(m) = s.strip_prefix("Z/") {
        let m: u64 = m.parse().map_err(|_| usage(format!("bad monoid {spec:?}")))?;
        if m < 2 {
            return Err(usage("Z/m needs m >= 2"));
        }
        return Ok((RingSpec::IntegersMod(m), None));
    }
    Err(usage(format!("bad monoid {spec:?}: expected Fq, GF(q) or Z/m")))
}

fn count_monoid(params: &GadgetParams, spec: &str, format: Format, budget: u128) -> Result<Outcome> {
    let rs = params
        .root_system
        .as_ref()
        .ok_or_else(|| usage("--monoid needs the chevalley gadget and --type"))?;
    let (ring, q) = parse_monoid(spec)?;
    let m = monoid_of_ring(&ring);
    let points = chevalley_points_monoid(rs, &m, budget)?.len() as u128;
    let mut t = Table::new("chevgroup", &["monoid", "points", "polynomial", "brute_force", "match"]);
    t.note("gadget", format!("G({rs}) over the monoid functor"));
    let poly = f1points::gadgets::counting_polynomial(rs, f1points::gadgets::Variable::Q)?;
    t.note("N(q)", poly.to_string());
    let expected = q.map(|q| poly.eval(q as i128));
    let brute = match q {
        Some(q) => brute_force("chevalley", params, q)?,
        None => None,
    };
    let matches = compare(expected, brute, points);
    let ok = matches != Some(false);
    t.push(vec![
        json!(spec),
        json!(points as u64),
        expected.map_or(Value::Null, |e| json!(e as i64)),
        brute.map_or(Value::Null, |b| json!(b as u64)),
        json!(matches),
    ]);
    Ok(Outcome { text: t.render(format)?, ok })
}

#[derive(Args, Debug)]
pub struct BruhatArgs {
    #[command(flatten)]
    ty: TypeArg,

    /// Field order (a prime power up to 81).
    #[arg(long)]
    q: u32,

    /// Per-cell sizes against (q-1)^l q^N q^l(w). This is the default.
    #[arg(long)]
    census: bool,

    /// Decompose this matrix instead, given as a JSON array of rows.
    #[arg(long, conflicts_with = "census")]
    matrix: Option<String>,
}

fn type_a(rs: &RootSystem) -> Result<()> {
    if rs.diagonal_characters().is_none() {
        return Err(f1points::Error::Unsupported(format!(
            "{rs}: matrices are available for simply connected type A only"
        ))
        .into());
    }
    Ok(())
}

pub fn bruhat(args: &BruhatArgs, format: Format, budget: u128) -> Result<Outcome> {
    let rs = root_system(args.ty.get())?;
    type_a(&rs)?;
    let f = FiniteField::of_order(args.q)?;
    let sl = SlnRealization::from_root_system(&rs, f.clone())?;
    let weyl = sl.weyl().clone();
    if let Some(m) = &args.matrix {
        let g: RingMatrix<u32> = serde_json::from_str::<Vec<Vec<i64>>>(m)
            .map_err(|e| usage(format!("bad --matrix: {e}")))?
            .iter()
            .map(|row| row.iter().map(|&x| f.from_int(x)).collect())
            .collect();
        if g.len() != sl.dim() || g.iter().any(|r| r.len() != sl.dim()) {
            return Err(usage(format!("--matrix must be {0}x{0}", sl.dim())));
        }
        let fac = bruhat_decompose(&sl, &g)?;
        let out = json!({
            "u": fac.u,
            "h": fac.h,
            "w": word_json(&weyl, fac.w),
            "u_prime": fac.u_prime,
            "length": weyl.length(fac.w),
        });
        return Ok(Outcome { text: serde_json::to_string_pretty(&out)? + "\n", ok: true });
    }
    let group = enumerate_group(rs.rank(), &f, budget.max(DEFAULT_GROUP_BUDGET))?;
    let mut cells: BTreeMap<usize, u128> = BTreeMap::new();
    for g in &group {
        *cells.entry(bruhat_decompose(&sl, g)?.w).or_default() += 1;
    }
    let (q, l, n) = (args.q as u128, rs.rank() as u32, rs.num_positive() as u32);
    let mut t = Table::new("brute-force", &["w", "length", "cell", "expected", "match"]);
    t.note("group", format!("SL{}(F{})", rs.rank() + 1, args.q));
    t.note("expected", "(q-1)^l q^N q^l(w)");
    t.note("order", group.len().to_string());
    let mut ok = true;
    for w in 0..weyl.order() {
        let size = cells.get(&w).copied().unwrap_or(0);
        let expected = (q - 1).pow(l) * q.pow(n) * q.pow(weyl.length(w) as u32);
        ok &= size == expected;
        t.push(vec![
            json!(word_text(&weyl, w)),
            json!(weyl.length(w)),
            json!(size as u64),
            json!(expected as u64),
            json!(size == expected),
        ]);
    }
    Ok(Outcome { text: t.render(format)?, ok })
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    ty: TypeArg,

    /// The pointed group (D, eps).
    #[arg(long, default_value = "Z/2:eps=1")]
    group: String,

    /// 0: matrices over Z[D, eps]; k >= 1: the k-th character of D with
    /// chi(eps) = -1 (lexicographic in the angles), matrices over Z[zeta_m]
    /// with m the exponent of D.
    #[arg(long = "char", default_value_t = 0)]
    character: usize,
}

fn group_ring_json(ring: &ReducedGroupRing, m: &RingMatrix<f1points::arith::GroupRingElement>) -> Value {
    json!(m.iter().map(|row| row.iter().map(|x| ring.to_json(x)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn eval(args: &EvalArgs, budget: u128) -> Result<Outcome> {
    let rs = root_system(args.ty.get())?;
    type_a(&rs)?;
    let d = group(&args.group)?;
    let points = chevalley_points(&rs, &d, budget)?;
    let point_json = |tits: &TitsGroup, deg: usize, p: &f1points::gadgets::GPoint| {
        let coords = |v: &[Option<usize>]| -> Vec<Value> {
            v.iter().map(|c| c.map_or(Value::Null, |g| json!(d.tuple(g)))).collect()
        };
        json!({ "degree": deg, "a": coords(&p.a), "n": tits.format_element(&p.n), "b": coords(&p.b) })
    };
    let mut out = Vec::new();
    if args.character == 0 {
        let ev = group_ring_evaluator(&rs, &d)?;
        for (deg, p) in points.iter() {
            let mut entry = point_json(ev.tits(), *deg, p);
            entry["matrix"] = group_ring_json(ev.ring(), &ev.e_g_graded(&p.a, &p.n, &p.b));
            out.push(entry);
        }
    } else {
        let chars = characters(&d);
        let chi = chars
            .get(args.character - 1)
            .ok_or_else(|| usage(format!("--char must be between 0 and {}", chars.len())))?;
        let m = d.exponent().max(1);
        let ev = character_evaluator(&rs, chi, m)?;
        let tits = TitsGroup::new(&rs, &d)?;
        for (deg, p) in points.iter() {
            let mut entry = point_json(&tits, *deg, p);
            let mat = ev.e_g_graded(&p.a, &p.n, &p.b);
            entry["matrix"] = json!(mat
                .iter()
                .map(|row| row.iter().map(|x| json!(x.coeffs())).collect::<Vec<_>>())
                .collect::<Vec<_>>());
            out.push(entry);
        }
    }
    let label = if args.character == 0 {
        format!("Z[{d}]")
    } else {
        format!("Z[zeta_{}] via {}", d.exponent().max(1), characters(&d)[args.character - 1])
    };
    let doc = json!({ "root_system": rs.to_string(), "group": d.to_string(), "ring": label, "points": out });
    Ok(Outcome { text: serde_json::to_string_pretty(&doc)? + "\n", ok: true })
}

pub fn verify(format: Format, budget: u128) -> Result<Outcome> {
    let results = run_suite(budget);
    let mut t = Table::new("invariant-suite", &["check", "status", "detail"]);
    let failed = results.iter().filter(|r| !r.passed).count();
    t.note("checks", format!("{} run, {failed} failed", results.len()));
    for r in &results {
        t.push(vec![json!(r.name), json!(if r.passed { "PASS" } else { "FAIL" }), json!(r.detail)]);
    }
    Ok(Outcome { text: t.render(format).context("rendering")?, ok: failed == 0 })
}
