//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, read column by column, packed six bits per byte and
//! offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const SHORT_MAX: usize = 62;
const LONG_MAX: usize = 258_047;

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= LONG_MAX, "graph6 cannot encode {n} vertices");
    let mut out = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let column = g.neighbors(j);
        for i in 0..j {
            chunk <<= 1;
            if column.binary_search(&i).is_ok() {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn graph6_decode(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if let Some(&bad) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("byte {bad} outside 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [b'~', b'~', ..] => {
            return Err(Error::Graph6("8-byte size header is not supported".into()))
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= SHORT_MAX {
                return Err(Error::Graph6(format!("long header used for n = {n}")));
            }
            (n, &rest[3..])
        }
        [head, rest @ ..] => ((head - 63) as usize, rest),
    };
    if n == 0 {
        return Err(Error::Graph6("zero vertices".into()));
    }

    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let pad = expected * 6 - bits;
    if pad > 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(n, edges))
}
