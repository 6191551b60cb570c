use std::io::{self, Write};

use covarray_core::construct::Provenance;
use covarray_core::geometry::{MobiusPlane, PlaneVariant};
use covarray_core::gf::FieldTower;

use crate::{Error, Result};

/// `MOBIUS q=<q> variant=<v> poly=<p>` then one sorted circle per line.
/// Degenerate truncated circles are written too; an empty circle is an
/// empty line.
pub fn write_plane<W: Write>(mut w: W, plane: &MobiusPlane, tower: &FieldTower) -> io::Result<()> {
    writeln!(
        w,
        "MOBIUS q={} variant={} poly={}",
        plane.q(),
        plane.variant(),
        Provenance::poly_token(tower)
    )?;
    for c in plane.circles() {
        let line: Vec<String> = c.iter().map(|p| p.to_string()).collect();
        writeln!(w, "{}", line.join(" "))?;
    }
    Ok(())
}

/// Header fields and circles of a plane dump.
pub fn parse_plane(text: &str) -> Result<(u32, PlaneVariant, String, Vec<Vec<u32>>)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty plane dump"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("MOBIUS") {
        return Err(Error::parse(1, "expected `MOBIUS` header"));
    }
    let (mut q, mut variant, mut poly) = (None, None, None);
    for w in words {
        match w.split_once('=') {
            Some(("q", v)) => q = v.parse::<u32>().ok(),
            Some(("variant", v)) => variant = PlaneVariant::from_name(v),
            Some(("poly", v)) => poly = Some(v.to_string()),
            _ => return Err(Error::parse(1, format!("unexpected header field {w:?}"))),
        }
    }
    let circles = lines
        .enumerate()
        .map(|(i, l)| {
            l.split_whitespace()
                .map(|p| {
                    p.parse::<u32>()
                        .map_err(|_| Error::parse(i + 2, format!("bad point {p:?}")))
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<u32>>>>()?;
    Ok((
        q.ok_or_else(|| Error::parse(1, "missing or bad q="))?,
        variant.ok_or_else(|| Error::parse(1, "missing or bad variant="))?,
        poly.ok_or_else(|| Error::parse(1, "missing poly="))?,
        circles,
    ))
}
