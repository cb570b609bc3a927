//! graph6 encoding and decoding, bit-exact per the standard format.
//!
//! The vertex count is encoded as `n + 63` for `n <= 62`, as `'~'` plus
//! three sextets for `n <= 258047`, and as `"~~"` plus six sextets beyond
//! that. The upper triangle follows in column-major order, packed six bits
//! per byte, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Encode a graph as a graph6 string (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let mut group: u8 = 0;
    let mut filled: u8 = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        bytes.push(group + OFFSET);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decode a graph6 line (optionally prefixed by the `>>graph6<<` header).
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::BadGraph6("empty input".into()));
    }
    for &b in bytes {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::BadGraph6(format!("byte {b} outside 63..=126")));
        }
    }

    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::BadGraph6("truncated 4-byte vertex count".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - OFFSET) as usize;
        }
        if n <= 62 {
            return Err(Error::BadGraph6("non-canonical long vertex count".into()));
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Error::BadGraph6("truncated 8-byte vertex count".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - OFFSET) as usize;
        }
        if n <= 258_047 {
            return Err(Error::BadGraph6("non-canonical long vertex count".into()));
        }
        (n, 8)
    };

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::BadGraph6(format!(
            "expected {} data bytes for n = {}, got {}",
            nbytes,
            n,
            bytes.len() - pos
        )));
    }

    let mut edges = Vec::new();
    let mut group: u8 = 0;
    let mut avail: u8 = 0;
    for j in 1..n {
        for i in 0..j {
            if avail == 0 {
                group = bytes[pos] - OFFSET;
                pos += 1;
                avail = 6;
            }
            if group & 0x20 != 0 {
                edges.push((i, j));
            }
            group = (group << 1) & 0x3f;
            avail -= 1;
        }
    }
    if avail > 0 && group != 0 {
        return Err(Error::BadGraph6("nonzero padding bits".into()));
    }
    Graph::build(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn known_encodings() {
        // Standard reference examples.
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::build(2, &[(0, 1)]).unwrap()), "A_");
        assert_eq!(encode(&Graph::complete(3)), "Bw");
        // The 5-vertex, 4-edge example from the format description.
        let g = Graph::build(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn roundtrip_small() {
        for g in [
            Graph::empty(1),
            Graph::cycle(6),
            Graph::complete(7),
            Graph::star(5),
            Graph::path(9),
        ] {
            let s = encode(&g);
            let h = decode(&s).unwrap();
            assert_eq!(g, h);
            assert_eq!(encode(&h), s);
        }
    }

    #[test]
    fn roundtrip_large_n() {
        let g = Graph::path(100);
        let s = encode(&g);
        assert_eq!(s.as_bytes()[0], 126);
        let h = decode(&s).unwrap();
        assert_eq!(g, h);
        assert_eq!(encode(&h), s);
    }

    #[test]
    fn header_is_stripped() {
        let g = Graph::cycle(5);
        let s = format!(">>graph6<<{}", encode(&g));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("D").is_err()); // truncated body
        assert!(decode("A\u{7f}").is_err()); // byte out of range
        // n = 3 leaves three padding bits; they must be zero
        assert!(decode("BF").is_err());
        assert!(decode("Bw").is_ok());
    }
}
