//! JSON encodings shared by the CLI and the reports. Rationals are always
//! written as `"num/den"` strings in lowest terms; on input integers,
//! `"n"`, `"-inf"` and `"+inf"` are also accepted where they make sense.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::algebra::{
    atoms_of, AtomSet, Component, Ext, FiniteHom, IntervalUlt, PiecewiseAffine, PowersetAlgebra, Rat, Region, Side,
};
use crate::contact::{FiniteContact, FiniteLca, LocalContactAlgebra};
use crate::duality::{z_space, CommaObject};
use crate::error::{Error, Result};
use crate::topology::{quotient, FiniteSpace, PointMap};

pub fn rat_str(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn ext_str(e: &Ext) -> String {
    match e {
        Ext::NegInf => "-inf".into(),
        Ext::PosInf => "+inf".into(),
        Ext::Fin(x) => rat_str(x),
    }
}

pub fn set_json(a: AtomSet) -> Value {
    json!(atoms_of(a))
}

pub fn region_json(r: &Region) -> Value {
    json!({"components": r.components().iter()
        .map(|c| json!({"lo": ext_str(&c.lo), "hi": ext_str(&c.hi)}))
        .collect::<Vec<_>>()})
}

pub fn side_str(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

pub fn ult_json(u: &IntervalUlt) -> Value {
    match u {
        IntervalUlt::Point(x, s) => json!({"point": rat_str(x), "side": side_str(*s)}),
        IntervalUlt::LeftInfinity => json!("-inf"),
        IntervalUlt::RightInfinity => json!("+inf"),
    }
}

pub fn hom_json(g: &PiecewiseAffine) -> Value {
    let strs = |v: &[Rat]| v.iter().map(rat_str).collect::<Vec<_>>();
    json!({"breakpoints": strs(g.breakpoints()), "slopes": strs(g.slopes()), "offsets": strs(g.offsets())})
}

pub fn parse_rat(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rat::from_integer(BigInt::from(i)))
            .ok_or_else(|| Error::input(format!("{n} is not an integer; write rationals as \"p/q\""))),
        Value::String(s) => parse_rat_str(s),
        other => Err(Error::input(format!("expected a rational, got {other}"))),
    }
}

pub fn parse_rat_str(s: &str) -> Result<Rat> {
    let bad = || Error::input(format!("`{s}` is not a rational \"p/q\""));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(Error::input(format!("`{s}` has a zero denominator")));
    }
    Ok(Rat::new(n, d))
}

pub fn parse_ext(v: &Value) -> Result<Ext> {
    match v.as_str() {
        Some("-inf") => Ok(Ext::NegInf),
        Some("+inf") | Some("inf") => Ok(Ext::PosInf),
        _ => Ok(Ext::Fin(parse_rat(v)?)),
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::input(format!("missing field `{key}` in {v}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::input(format!("{what} must be an array, got {v}")))
}

/// Finite element: an array of atom indices below `n`.
pub fn parse_set(v: &Value, n: usize) -> Result<AtomSet> {
    let mut m = 0;
    for x in array(v, "an element")? {
        let i = x.as_u64().ok_or_else(|| Error::input(format!("atom index expected, got {x}")))? as usize;
        if i >= n {
            return Err(Error::input(format!("atom {i} out of range for {n} atoms")));
        }
        m |= 1 << i;
    }
    Ok(m)
}

/// Interval element. Components are validated individually and then
/// normalised, so touching or overlapping input components are merged.
pub fn parse_region(v: &Value) -> Result<Region> {
    let comps = array(field(v, "components")?, "components")?
        .iter()
        .map(|c| Component::new(parse_ext(field(c, "lo")?)?, parse_ext(field(c, "hi")?)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Region::from_components(comps))
}

pub fn parse_ult(v: &Value) -> Result<IntervalUlt> {
    match v.as_str() {
        Some("-inf") => return Ok(IntervalUlt::LeftInfinity),
        Some("+inf") => return Ok(IntervalUlt::RightInfinity),
        _ => {}
    }
    let x = parse_rat(field(v, "point")?)?;
    let side = match field(v, "side")?.as_str() {
        Some("left") => Side::Left,
        Some("right") => Side::Right,
        _ => return Err(Error::input("side must be \"left\" or \"right\"")),
    };
    Ok(IntervalUlt::Point(x, side))
}

pub fn parse_hom(v: &Value) -> Result<PiecewiseAffine> {
    let list = |k: &str| array(field(v, k)?, k)?.iter().map(parse_rat).collect::<Result<Vec<_>>>();
    PiecewiseAffine::new(list("breakpoints")?, list("slopes")?, list("offsets")?)
}

/// Parse text as JSON, reporting line and column on failure.
pub fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        Error::input(format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column()))
    })
}

/// Build an object from key/value pairs, preserving the given order.
pub fn object<I: IntoIterator<Item = (String, Value)>>(items: I) -> Value {
    Value::Object(items.into_iter().collect::<Map<_, _>>())
}

/// `{"points": [..], "opens": [[..], ..]}`.
pub fn space_json(x: &FiniteSpace) -> Value {
    json!({"points": x.names(), "opens": x.opens().iter().map(|&o| x.names_of(o)).collect::<Vec<_>>()})
}

fn names(v: &Value, what: &str) -> Result<Vec<String>> {
    array(v, what)?
        .iter()
        .map(|s| s.as_str().map(str::to_string).ok_or_else(|| Error::input(format!("{what} must hold strings, got {s}"))))
        .collect()
}

pub fn parse_space(v: &Value) -> Result<FiniteSpace> {
    let points = names(field(v, "points")?, "points")?;
    let probe = FiniteSpace::discrete_named(points.clone())?;
    let opens = array(field(v, "opens")?, "opens")?
        .iter()
        .map(|o| {
            let ns = names(o, "an open set")?;
            probe.set_of(&ns.iter().map(String::as_str).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteSpace::new(points, opens)
}

pub fn map_json(f: &PointMap) -> Value {
    let (d, c) = (f.dom().names(), f.cod().names());
    json!({"map": object(f.values().iter().enumerate().map(|(i, &j)| (d[i].clone(), json!(c[j]))))})
}

/// `{"map": {"p": "a", ..}}` between two given spaces.
pub fn parse_point_map(v: &Value, dom: &FiniteSpace, cod: &FiniteSpace) -> Result<PointMap> {
    let m = field(v, "map")?.as_object().ok_or_else(|| Error::input("`map` must be an object"))?;
    let mut values = vec![usize::MAX; dom.len()];
    for (k, t) in m {
        let target = t.as_str().ok_or_else(|| Error::input(format!("image of `{k}` must be a point name")))?;
        values[dom.point_index(k)?] = cod.point_index(target)?;
    }
    if let Some(i) = values.iter().position(|&v| v == usize::MAX) {
        return Err(Error::input(format!("no image given for `{}`", dom.names()[i])));
    }
    PointMap::new(dom.clone(), cod.clone(), values)
}

pub fn lca_json(l: &FiniteLca) -> Value {
    json!({
        "atoms": l.n(),
        "contact_pairs": l.contact_algebra().pairs().iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        "bounded_max": set_json(l.bounded_generator()),
    })
}

/// The contact JSON; a missing `bounded_max` means every element is bounded.
pub fn parse_finite_lca(v: &Value) -> Result<FiniteLca> {
    let n = field(v, "atoms")?.as_u64().ok_or_else(|| Error::input("`atoms` must be a non-negative integer"))? as usize;
    let pairs = match v.get("contact_pairs") {
        None => vec![],
        Some(p) => array(p, "contact_pairs")?
            .iter()
            .map(|pair| match pair.as_array().map(|a| a.as_slice()) {
                Some([a, b]) => match (a.as_u64(), b.as_u64()) {
                    (Some(a), Some(b)) => Ok((a as usize, b as usize)),
                    _ => Err(Error::input(format!("contact pair {pair} must hold two atom indices"))),
                },
                _ => Err(Error::input(format!("contact pair {pair} must have two entries"))),
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let contact = FiniteContact::from_pairs(n, &pairs)?;
    let bounded = match v.get("bounded_max") {
        None => contact.top(),
        Some(b) => parse_set(b, n)?,
    };
    FiniteLca::new(contact, bounded)
}

/// `"interval"` or the finite contact JSON.
pub fn parse_lca(v: &Value) -> Result<LocalContactAlgebra> {
    match v.as_str() {
        Some("interval") => Ok(LocalContactAlgebra::Interval),
        Some(other) => Err(Error::input(format!("unknown algebra descriptor `{other}`"))),
        None => Ok(LocalContactAlgebra::Finite(parse_finite_lca(v)?)),
    }
}

pub fn finite_hom_json(h: &FiniteHom) -> Value {
    json!({"dual_map": h.dual_map()})
}

pub fn parse_finite_hom(v: &Value, dom: usize, cod: usize) -> Result<FiniteHom> {
    let d = array(field(v, "dual_map")?, "dual_map")?
        .iter()
        .map(|x| x.as_u64().map(|i| i as usize).ok_or_else(|| Error::input(format!("dual_map entry {x} is not an index"))))
        .collect::<Result<Vec<_>>>()?;
    FiniteHom::new(dom, cod, d)
}

/// `{"table": {"[0]": "[1]", ..}}`: every source element must be listed.
pub fn parse_clca_table(v: &Value, source: usize, target: usize) -> Result<Vec<AtomSet>> {
    let t = field(v, "table")?.as_object().ok_or_else(|| Error::input("`table` must be an object"))?;
    let mut table = vec![None; 1 << source];
    for (k, val) in t {
        let key = parse_text(k).and_then(|kv| parse_set(&kv, source))?;
        let value = match val {
            Value::String(s) => parse_text(s).and_then(|x| parse_set(&x, target))?,
            other => parse_set(other, target)?,
        };
        table[key as usize] = Some(value);
    }
    table
        .iter()
        .enumerate()
        .map(|(a, v)| v.ok_or_else(|| Error::input(format!("table has no entry for {}", set_json(a as AtomSet)))))
        .collect()
}

/// `{"table": {"[0]": "[1]", ..}}` for a function given on every element.
pub fn table_json(table: &[AtomSet]) -> Value {
    json!({"table": object(
        table.iter().enumerate().map(|(a, &v)| (set_json(a as AtomSet).to_string(), Value::String(set_json(v).to_string())))
    )})
}

pub fn comma_json(o: &CommaObject) -> Value {
    o.to_json()
}

/// `{"algebra": {"atoms": n}, "Z": "all" | ["u0", ..], "p": {"classes": [[..], ..]}}`.
/// The codomain is the quotient of the discrete `Z` by the given classes.
pub fn parse_comma(v: &Value) -> Result<CommaObject> {
    let alg = field(v, "algebra")?;
    let n = field(alg, "atoms")?.as_u64().ok_or_else(|| Error::input("`algebra.atoms` must be an integer"))? as usize;
    let algebra = PowersetAlgebra::new(n)?;
    let z = match field(v, "Z")? {
        Value::String(s) if s == "all" => algebra.top(),
        other => names(other, "Z")?.iter().try_fold(0, |m, s| Ok::<_, Error>(m | 1 << ult_index(s, n)?))?,
    };
    let zspace = z_space(z)?;
    let classes = array(field(field(v, "p")?, "classes")?, "classes")?
        .iter()
        .map(|c| names(c, "a class")?.iter().map(|s| zspace.point_index(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let (_, p) = quotient(&zspace, &classes)?;
    Ok(CommaObject { algebra, z, p })
}

fn ult_index(s: &str, n: usize) -> Result<usize> {
    s.strip_prefix('u')
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&i| i < n)
        .ok_or_else(|| Error::input(format!("`{s}` is not an ultrafilter name u0..u{}", n.saturating_sub(1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn rationals_always_have_denominators() {
        assert_eq!(rat_str(&rat(0, 5)), "0/1");
        assert_eq!(rat_str(&rat(6, 4)), "3/2");
        assert_eq!(parse_rat(&json!(3)).unwrap(), rat(3, 1));
        assert_eq!(parse_rat(&json!("-2/4")).unwrap(), rat(-1, 2));
        assert!(parse_rat(&json!("1/0")).is_err());
    }

    #[test]
    fn region_round_trip() {
        let r = Region::left_ray(rat(0, 1)).join(&Region::interval(rat(1, 2), rat(3, 1)));
        let v = region_json(&r);
        assert_eq!(v["components"][0]["lo"], "-inf");
        assert_eq!(parse_region(&v).unwrap(), r);
    }

    #[test]
    fn malformed_text_reports_position() {
        let e = parse_text("{\n  \"a\": }").unwrap_err();
        assert!(e.to_string().contains("line 2"));
    }
}
