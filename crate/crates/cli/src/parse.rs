//! Text-format parsers for ideals, directions, complexes and points.
//!
//! Ideal grammar: generators separated by commas; a monomial is a product of
//! `var('^' int)?` factors joined by `*`; variables are x, y, z for up to
//! three variables or x1..xn in general. `1` denotes the unit ideal and `0`
//! the zero ideal.

use idealgraph::field::{Coeff, Field};
use idealgraph::ideal::MonomialIdeal;
use idealgraph::monomial::{Direction, Monomial};
use idealgraph::simplicial::{face_from_vertices, Face, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(message: impl Into<String>, position: usize) -> Result<T, ParseError> {
    Err(ParseError {
        message: message.into(),
        position,
    })
}

/// A generator as sparse (variable index, exponent) pairs.
type RawMonomial = Vec<(usize, u32)>;

pub struct RawIdeal {
    pub gens: Vec<RawMonomial>,
    pub max_var: Option<usize>,
    pub is_zero: bool,
}

/// First parsing phase: variable indices without committing to n.
pub fn parse_raw_ideal(text: &str) -> Result<RawIdeal, ParseError> {
    let trimmed = text.trim();
    if trimmed == "0" {
        return Ok(RawIdeal {
            gens: vec![],
            max_var: None,
            is_zero: true,
        });
    }
    let mut gens = Vec::new();
    let mut max_var: Option<usize> = None;
    let mut offset = 0usize;
    for part in text.split(',') {
        let gen = parse_raw_monomial(part, offset, &mut max_var)?;
        gens.push(gen);
        offset += part.len() + 1;
    }
    Ok(RawIdeal {
        gens,
        max_var,
        is_zero: false,
    })
}

fn parse_raw_monomial(
    text: &str,
    base: usize,
    max_var: &mut Option<usize>,
) -> Result<RawMonomial, ParseError> {
    let mut factors: RawMonomial = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0usize;
    let mut saw_factor = false;
    let mut expect_factor = true;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        if ch == '*' {
            if expect_factor {
                return err("unexpected '*'", base + i);
            }
            expect_factor = true;
            i += 1;
            continue;
        }
        if !expect_factor {
            return err(format!("expected '*' before '{}'", ch), base + i);
        }
        if ch == '1' && factors.is_empty() && !saw_factor {
            // the constant monomial
            i += 1;
            saw_factor = true;
            expect_factor = false;
            continue;
        }
        if !ch.is_ascii_alphabetic() {
            return err(format!("expected a variable, found '{}'", ch), base + i);
        }
        let name_start = i;
        while i < bytes.len() && (bytes[i] as char).is_ascii_alphabetic() {
            i += 1;
        }
        let name = &text[name_start..i];
        let digit_start = i;
        while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
            i += 1;
        }
        let index = if digit_start < i {
            if name != "x" {
                return err(
                    format!("indexed variables use x1..xn, found '{}'", name),
                    base + name_start,
                );
            }
            let idx: usize = text[digit_start..i].parse().map_err(|_| ParseError {
                message: "variable index out of range".into(),
                position: base + digit_start,
            })?;
            if idx == 0 {
                return err("variable indices start at 1", base + digit_start);
            }
            idx - 1
        } else {
            match name {
                "x" => 0,
                "y" => 1,
                "z" => 2,
                _ => {
                    return err(
                        format!("unknown variable '{}' (use x, y, z or x1..xn)", name),
                        base + name_start,
                    )
                }
            }
        };
        let mut exponent = 1u32;
        if i < bytes.len() && bytes[i] as char == '^' {
            i += 1;
            let exp_start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            if exp_start == i {
                return err("expected an exponent after '^'", base + i);
            }
            exponent = text[exp_start..i].parse().map_err(|_| ParseError {
                message: "exponent out of range".into(),
                position: base + exp_start,
            })?;
        }
        factors.push((index, exponent));
        *max_var = Some(max_var.map_or(index, |m| m.max(index)));
        saw_factor = true;
        expect_factor = false;
    }
    if !saw_factor {
        return err("empty generator", base);
    }
    Ok(factors)
}

/// Materialize a raw ideal in an n-variable ring.
pub fn realize_ideal(raw: &RawIdeal, n: usize) -> Result<MonomialIdeal, ParseError> {
    if raw.is_zero {
        return Ok(MonomialIdeal::zero(n));
    }
    let mut gens = Vec::new();
    for gen in &raw.gens {
        let mut exps = vec![0u32; n];
        for &(idx, e) in gen {
            if idx >= n {
                return err(format!("variable x{} exceeds {} variables", idx + 1, n), 0);
            }
            exps[idx] += e;
        }
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(n, gens).map_err(|e| ParseError {
        message: e.to_string(),
        position: 0,
    })
}

/// Parse one ideal, inferring n from the variables used unless given.
pub fn parse_ideal(text: &str, nvars: Option<usize>) -> Result<MonomialIdeal, ParseError> {
    let raw = parse_raw_ideal(text)?;
    let needed = raw.max_var.map_or(0, |m| m + 1);
    let n = match nvars {
        Some(n) => n.max(needed),
        None => needed.max(1),
    };
    realize_ideal(&raw, n)
}

/// Parse several ideals into a common ring.
pub fn parse_ideals(
    texts: &[&str],
    nvars: Option<usize>,
) -> Result<Vec<MonomialIdeal>, ParseError> {
    let raws: Vec<RawIdeal> = texts
        .iter()
        .map(|t| parse_raw_ideal(t))
        .collect::<Result<_, _>>()?;
    let needed = raws
        .iter()
        .filter_map(|r| r.max_var)
        .map(|m| m + 1)
        .max()
        .unwrap_or(0);
    let n = match nvars {
        Some(n) => n.max(needed),
        None => needed.max(1),
    };
    raws.iter().map(|r| realize_ideal(r, n)).collect()
}

/// Directions: "(1,-1)" or "1,-1".
pub fn parse_direction(text: &str) -> Result<Direction, ParseError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed);
    let mut entries = Vec::new();
    for (i, part) in inner.split(',').enumerate() {
        let v: i64 = part.trim().parse().map_err(|_| ParseError {
            message: format!("expected an integer, found '{}'", part.trim()),
            position: i,
        })?;
        entries.push(v);
    }
    Direction::new(entries).map_err(|e| ParseError {
        message: e.to_string(),
        position: 0,
    })
}

/// Facet lists: "123,124" (single-digit vertices) or "{1,2,3},{1,2,4}".
/// "-" denotes the void complex and "{}" the complex {∅}.
pub fn parse_complex(text: &str, nvars: Option<usize>) -> Result<SimplicialComplex, ParseError> {
    let trimmed = text.trim();
    if trimmed == "-" {
        return SimplicialComplex::from_faces(nvars.unwrap_or(1), vec![]).map_err(|e| ParseError {
            message: e.to_string(),
            position: 0,
        });
    }
    let mut faces: Vec<Face> = Vec::new();
    let mut max_vertex = 0usize;
    if trimmed.contains('{') {
        let mut rest = trimmed;
        while let Some(open) = rest.find('{') {
            let close = match rest.find('}') {
                Some(c) if c > open => c,
                _ => return err("unbalanced braces", open),
            };
            let inner = &rest[open + 1..close];
            let mut vertices = Vec::new();
            if !inner.trim().is_empty() {
                for part in inner.split(',') {
                    let v: usize = part.trim().parse().map_err(|_| ParseError {
                        message: format!("expected a vertex number, found '{}'", part.trim()),
                        position: open,
                    })?;
                    if v == 0 {
                        return err("vertices are numbered from 1", open);
                    }
                    max_vertex = max_vertex.max(v);
                    vertices.push(v);
                }
            }
            faces.push(face_from_vertices(&vertices));
            rest = &rest[close + 1..];
        }
    } else {
        for (i, part) in trimmed.split(',').enumerate() {
            let token = part.trim();
            if token.is_empty() {
                return err("empty facet", i);
            }
            let mut vertices = Vec::new();
            for ch in token.chars() {
                let v = ch.to_digit(10).ok_or_else(|| ParseError {
                    message: format!("expected a digit vertex, found '{}'", ch),
                    position: i,
                })? as usize;
                if v == 0 {
                    return err("vertices are numbered from 1", i);
                }
                max_vertex = max_vertex.max(v);
                vertices.push(v);
            }
            faces.push(face_from_vertices(&vertices));
        }
    }
    let n = nvars.map_or(max_vertex, |n| n.max(max_vertex));
    SimplicialComplex::from_faces(n.max(1), faces).map_err(|e| ParseError {
        message: e.to_string(),
        position: 0,
    })
}

/// Vertex subsets for flip moves: "12", "{1,2}".
pub fn parse_face(text: &str) -> Result<Face, ParseError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(trimmed);
    let mut vertices = Vec::new();
    if inner.contains(',') {
        for part in inner.split(',') {
            let v: usize = part.trim().parse().map_err(|_| ParseError {
                message: format!("expected a vertex number, found '{}'", part.trim()),
                position: 0,
            })?;
            vertices.push(v);
        }
    } else {
        for ch in inner.chars() {
            let v = ch.to_digit(10).ok_or_else(|| ParseError {
                message: format!("expected a digit vertex, found '{}'", ch),
                position: 0,
            })? as usize;
            vertices.push(v);
        }
    }
    if vertices.contains(&0) {
        return err("vertices are numbered from 1", 0);
    }
    if vertices.is_empty() {
        return err("empty vertex set", 0);
    }
    Ok(face_from_vertices(&vertices))
}

/// Component selections: 1-based indices "1,2" mapped to 0-based.
pub fn parse_selection(text: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let v: usize = part.trim().parse().map_err(|_| ParseError {
            message: format!("expected a component index, found '{}'", part.trim()),
            position: 0,
        })?;
        if v == 0 {
            return err("component indices start at 1", 0);
        }
        out.push(v - 1);
    }
    Ok(out)
}

/// λ-point assignments "a1=1,b1=2/3"; unassigned variables default to 0.
pub fn parse_point(text: &str, names: &[String], field: &Field) -> Result<Vec<Coeff>, ParseError> {
    let mut values = vec![field.zero(); names.len()];
    for part in text.split(',') {
        let (name, value) = part.split_once('=').ok_or_else(|| ParseError {
            message: format!("expected name=value, found '{}'", part.trim()),
            position: 0,
        })?;
        let idx = names
            .iter()
            .position(|n| n == name.trim())
            .ok_or_else(|| ParseError {
                message: format!("unknown variable '{}'", name.trim()),
                position: 0,
            })?;
        values[idx] = parse_coeff(value.trim(), field)?;
    }
    Ok(values)
}

fn parse_coeff(text: &str, field: &Field) -> Result<Coeff, ParseError> {
    let parse_int = |s: &str| -> Result<i64, ParseError> {
        s.trim().parse().map_err(|_| ParseError {
            message: format!("expected an integer, found '{}'", s.trim()),
            position: 0,
        })
    };
    match text.split_once('/') {
        None => Ok(field.from_i64(parse_int(text)?)),
        Some((num, den)) => {
            let n = field.from_i64(parse_int(num)?);
            let d = field.from_i64(parse_int(den)?);
            if field.is_zero(&d) {
                return err("zero denominator", 0);
            }
            Ok(field.div(&n, &d))
        }
    }
}

/// Field specifications "Q" or "Fp:P" for a prime P.
pub fn parse_field(text: &str) -> Result<Field, ParseError> {
    let trimmed = text.trim();
    if trimmed.eq_ignore_ascii_case("q") {
        return Ok(Field::Q);
    }
    if let Some(p_text) = trimmed
        .strip_prefix("Fp:")
        .or_else(|| trimmed.strip_prefix("fp:"))
    {
        let p: u32 = p_text.parse().map_err(|_| ParseError {
            message: format!("expected a prime, found '{}'", p_text),
            position: 3,
        })?;
        return Field::fp(p).map_err(|e| ParseError {
            message: e.to_string(),
            position: 3,
        });
    }
    err(format!("unknown field '{}' (use Q or Fp:<p>)", trimmed), 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideals_round_trip() {
        let m = parse_ideal("x^6, x^2*y, y^2", None).unwrap();
        assert_eq!(m.to_text(), "x^6, x^2*y, y^2");
        let unit = parse_ideal("1", None).unwrap();
        assert!(unit.is_unit());
        let zero = parse_ideal("0", Some(2)).unwrap();
        assert!(zero.is_zero());
        let indexed = parse_ideal("x1*x4, x2^3", None).unwrap();
        assert_eq!(indexed.nvars(), 4);
    }

    #[test]
    fn common_ring_inference() {
        let ideals = parse_ideals(&["x^4, y", "x^2, y^2"], None).unwrap();
        assert_eq!(ideals[0].nvars(), 2);
        assert_eq!(ideals[1].nvars(), 2);
        let with_z = parse_ideals(&["x", "z^2"], None).unwrap();
        assert_eq!(with_z[0].nvars(), 3);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_ideal("x^", None).unwrap_err();
        assert!(e.position > 0);
        assert!(parse_ideal("x + y", None).is_err());
        assert!(parse_ideal("w^2", None).is_err());
    }

    #[test]
    fn directions() {
        assert_eq!(parse_direction("(1,-1)").unwrap().entries(), &[1, -1]);
        assert_eq!(parse_direction("2, -1").unwrap().entries(), &[2, -1]);
        assert!(parse_direction("(0,0)").is_err());
    }

    #[test]
    fn complexes() {
        let a = parse_complex("123,124", None).unwrap();
        let b = parse_complex("{1,2,3},{1,2,4}", None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.nvars(), 4);
        let empty = parse_complex("{}", None).unwrap();
        assert!(!empty.is_void());
        assert!(empty.is_face(0));
        let void = parse_complex("-", Some(3)).unwrap();
        assert!(void.is_void());
    }

    #[test]
    fn printing_then_parsing_is_identity() {
        for text in ["x^6, x^2*y, y^2", "x^2, x*y^2, y^6", "x1*x4, x2^3"] {
            let m = parse_ideal(text, None).unwrap();
            assert_eq!(parse_ideal(&m.to_text(), Some(m.nvars())).unwrap(), m);
        }
        for text in ["123,124", "{1,2,3},{1,2,4},{2,3,4}"] {
            let x = parse_complex(text, None).unwrap();
            let printed = crate::output::facet_list_text(&x);
            assert_eq!(parse_complex(&printed, Some(x.nvars())).unwrap(), x);
        }
        for entries in [vec![1i64, -1], vec![2, -1], vec![-3, 0, 1]] {
            let c = idealgraph::monomial::Direction::new(entries).unwrap();
            assert_eq!(parse_direction(&c.to_string()).unwrap(), c);
        }
    }

    #[test]
    fn faces_points_fields() {
        assert_eq!(parse_face("12").unwrap(), 0b11);
        assert_eq!(parse_face("{1,2}").unwrap(), 0b11);
        assert_eq!(parse_selection("1,2").unwrap(), vec![0, 1]);
        let k = Field::Q;
        let names = vec!["a1".to_string(), "b1".to_string()];
        let point = parse_point("a1=2/3,b1=-1", &names, &k).unwrap();
        assert_eq!(point[0], k.div(&k.from_i64(2), &k.from_i64(3)));
        assert_eq!(point[1], k.from_i64(-1));
        assert_eq!(parse_field("Q").unwrap(), Field::Q);
        assert_eq!(parse_field("Fp:5").unwrap(), Field::Fp(5));
        assert!(parse_field("Fp:6").is_err());
    }
}
