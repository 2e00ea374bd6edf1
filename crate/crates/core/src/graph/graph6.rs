//! graph6 text encoding (McKay's format), bit-exact.
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte,
//! most significant bit first, each byte offset by 63. The last byte is
//! zero-padded.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order representable in graph6.
pub const MAX_ORDER: u64 = 68_719_476_735;

const HEADER: &str = ">>graph6<<";

fn encode_order(n: u64, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n as u64 <= MAX_ORDER);
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n as u64, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6InvalidByte { byte, offset });
        }
    }
    let (n, rest) = decode_order(bytes)?;
    if n > usize::MAX as u64 {
        return Err(Error::Graph6Header(format!("order {n} does not fit in memory")));
    }
    let n = n as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if rest.len() < expected {
        return Err(Error::Graph6Truncated {
            expected,
            found: rest.len(),
        });
    }
    if rest.len() > expected {
        return Err(Error::Graph6Trailing(rest.len() - expected));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if bit_count % 6 != 0 {
        let last = rest[expected - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6Padding);
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(u64, &[u8])> {
    let group = |s: &[u8]| s.iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63));
    match bytes {
        [] => Err(Error::Graph6Header("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6Header("8-byte order field cut short".into()));
            }
            let n = group(&rest[..6]);
            if n <= 258_047 {
                return Err(Error::Graph6Header(format!("order {n} must use a shorter form")));
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6Header("4-byte order field cut short".into()));
            }
            let n = group(&rest[..3]);
            if n <= 62 {
                return Err(Error::Graph6Header(format!("order {n} must use the 1-byte form")));
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok((u64::from(b - 63), rest)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_encodings() {
        assert_eq!(encode_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(encode_graph6(&Graph::path(3)), "Bg");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn small_decodings() {
        assert_eq!(decode_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(decode_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(decode_graph6("B?").unwrap(), Graph::empty(3));
        assert_eq!(decode_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn distinct_errors() {
        assert!(matches!(decode_graph6(""), Err(Error::Graph6Header(_))));
        assert!(matches!(decode_graph6("~??"), Err(Error::Graph6Header(_))));
        assert!(matches!(decode_graph6("C"), Err(Error::Graph6Truncated { expected: 1, found: 0 })));
        assert!(matches!(decode_graph6("Bww"), Err(Error::Graph6Trailing(1))));
        assert!(matches!(decode_graph6("B!"), Err(Error::Graph6InvalidByte { byte: b'!', offset: 1 })));
        assert!(matches!(decode_graph6("B@"), Err(Error::Graph6Padding)));
    }

    #[test]
    fn long_order_forms() {
        let g = Graph::path(63);
        let s = encode_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode_graph6(&s).unwrap(), g);

        let mut out = Vec::new();
        encode_order(258_048, &mut out);
        assert_eq!(out.len(), 8);
        assert_eq!(decode_order(&out).unwrap().0, 258_048);
    }
}
