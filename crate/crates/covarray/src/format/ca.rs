use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use covarray_core::construct::{CoveringArray, Provenance, SymbolMatrix};

use crate::{Error, Result};

const PROVENANCE_PREFIX: &str = "# provenance:";
/// Construction name recorded for arrays read without a header.
pub const ROWS_ONLY: &str = "rows-only";

/// `CA N t k v`, the provenance comment, then one row per line.
pub fn write_ca<W: Write>(mut w: W, ca: &CoveringArray) -> io::Result<()> {
    let p = ca.provenance();
    writeln!(w, "CA {} {} {} {}", ca.n(), ca.t(), ca.k(), ca.v())?;
    writeln!(
        w,
        "{PROVENANCE_PREFIX} {} q={} poly={} ingredient={}",
        p.construction,
        p.q,
        p.poly,
        p.ingredient
            .as_deref()
            .map(token)
            .unwrap_or_else(|| "none".into())
    )?;
    let mut line = String::new();
    for row in ca.matrix().iter_rows() {
        line.clear();
        for (i, s) in row.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            write!(line, "{s}").unwrap();
        }
        line.push('\n');
        w.write_all(line.as_bytes())?;
    }
    Ok(())
}

pub fn write_ca_file(path: &Path, ca: &CoveringArray) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = io::BufWriter::new(file);
    write_ca(&mut w, ca)
        .and_then(|()| w.flush())
        .map_err(|e| Error::io(path, e))
}

pub fn read_ca(path: &Path) -> Result<CoveringArray> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_ca(&text)
}

fn token(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_whitespace() { '_' } else { c })
        .collect()
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|w| {
            w.parse::<u32>()
                .map_err(|_| Error::parse(lineno, format!("not a number: {w:?}")))
        })
        .collect()
}

fn parse_provenance(line: &str, lineno: usize) -> Result<Provenance> {
    let rest = line
        .strip_prefix(PROVENANCE_PREFIX)
        .ok_or_else(|| Error::parse(lineno, "expected `# provenance:` line"))?;
    let mut words = rest.split_whitespace();
    let construction = words
        .next()
        .ok_or_else(|| Error::parse(lineno, "missing construction name"))?;
    let (mut q, mut poly, mut ingredient) = (None, None, None);
    for w in words {
        let (key, value) = w
            .split_once('=')
            .ok_or_else(|| Error::parse(lineno, format!("expected key=value, got {w:?}")))?;
        match key {
            "q" => {
                q = Some(
                    value
                        .parse::<u32>()
                        .map_err(|_| Error::parse(lineno, format!("bad q {value:?}")))?,
                )
            }
            "poly" => poly = Some(value.to_string()),
            "ingredient" => ingredient = Some(value.to_string()),
            _ => {
                return Err(Error::parse(
                    lineno,
                    format!("unknown provenance field {key:?}"),
                ))
            }
        }
    }
    Ok(Provenance {
        construction: construction.to_string(),
        q: q.ok_or_else(|| Error::parse(lineno, "missing q="))?,
        poly: poly.ok_or_else(|| Error::parse(lineno, "missing poly="))?,
        ingredient: ingredient.filter(|i| i != "none"),
    })
}

fn parse_rows<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    k: Option<usize>,
    v: u32,
) -> Result<(usize, Vec<u8>)> {
    let mut data = Vec::new();
    let mut width = k;
    let mut rows = 0;
    for (lineno, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let row = numbers(line, lineno)?;
        let expect = *width.get_or_insert(row.len());
        if row.len() != expect {
            return Err(Error::parse(
                lineno,
                format!("expected {expect} entries, found {}", row.len()),
            ));
        }
        if let Some(s) = row.iter().find(|&&s| s >= v) {
            return Err(Error::parse(lineno, format!("symbol {s} outside 0..{v}")));
        }
        data.extend(row.iter().map(|&s| s as u8));
        rows += 1;
    }
    Ok((rows, data))
}

/// Parses the native format. The row count must match the header exactly.
pub fn parse_ca(text: &str) -> Result<CoveringArray> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.first() != Some(&"CA") || fields.len() != 5 {
        return Err(Error::parse(1, "expected header `CA N t k v`"));
    }
    let nums = numbers(&fields[1..].join(" "), 1)?;
    let (n, t, k, v) = (nums[0] as usize, nums[1], nums[2] as usize, nums[3]);
    if v == 0 || v > 256 {
        return Err(Error::parse(
            1,
            format!("alphabet size {v} out of range 1..=256"),
        ));
    }
    if k == 0 {
        return Err(Error::parse(1, "no columns"));
    }
    let (_, prov_line) = lines
        .next()
        .ok_or_else(|| Error::parse(2, "missing provenance line"))?;
    let provenance = parse_provenance(prov_line, 2)?;
    let (rows, data) = parse_rows(lines, Some(k), v)?;
    if rows != n {
        return Err(Error::parse(
            last_line(text),
            format!("header promises {n} rows, found {rows}"),
        ));
    }
    Ok(CoveringArray::new(
        SymbolMatrix::new(n, k, data),
        t,
        v,
        provenance,
    )?)
}

fn last_line(text: &str) -> usize {
    text.lines().count()
}

/// Rows only, one per line; `t` and `v` come from the caller and the width
/// from the first row.
pub fn parse_rows_only(text: &str, t: u32, v: u32) -> Result<CoveringArray> {
    if v == 0 || v > 256 {
        return Err(Error::Usage(format!(
            "alphabet size {v} out of range 1..=256"
        )));
    }
    let (rows, data) = parse_rows(text.lines().enumerate().map(|(i, l)| (i + 1, l)), None, v)?;
    if rows == 0 {
        return Err(Error::parse(1, "no rows"));
    }
    let k = data.len() / rows;
    let provenance = Provenance {
        construction: ROWS_ONLY.into(),
        q: v,
        poly: String::new(),
        ingredient: None,
    };
    Ok(CoveringArray::new(
        SymbolMatrix::new(rows, k, data),
        t.min(k as u32),
        v,
        provenance,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use covarray_core::construct::build_ca3_projective;
    use covarray_core::gf::FieldTower;

    fn sample() -> CoveringArray {
        build_ca3_projective(&FieldTower::build(3, 1, 3, None).unwrap()).unwrap()
    }

    #[test]
    fn round_trip() {
        let ca = sample();
        let mut buf = Vec::new();
        write_ca(&mut buf, &ca).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("CA 53 3 13 3\n# provenance: ca3 q=3 poly="));
        assert!(text.lines().nth(1).unwrap().ends_with("ingredient=none"));
        assert_eq!(parse_ca(&text).unwrap(), ca);
    }

    #[test]
    fn rejects_truncation_and_bad_symbols() {
        let mut buf = Vec::new();
        write_ca(&mut buf, &sample()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let short: String = text.lines().take(20).map(|l| format!("{l}\n")).collect();
        assert!(matches!(parse_ca(&short), Err(Error::Parse { .. })));
        let headerless: String = text.lines().skip(2).map(|l| format!("{l}\n")).collect();
        assert!(matches!(
            parse_ca(&headerless),
            Err(Error::Parse { line: 1, .. })
        ));
        let bad = text.replacen("\n0 0 0", "\n0 0 7", 1);
        assert!(parse_ca(&bad).is_err());
        assert!(parse_ca("").is_err());
    }

    #[test]
    fn rows_only_fallback() {
        let ca = parse_rows_only("0 1\n1 0\n\n1 1\n0 0\n", 2, 2).unwrap();
        assert_eq!((ca.n(), ca.k(), ca.t(), ca.v()), (4, 2, 2, 2));
        assert_eq!(ca.provenance().construction, ROWS_ONLY);
        assert!(parse_rows_only("0 1\n1\n", 2, 2).is_err());
    }
}
