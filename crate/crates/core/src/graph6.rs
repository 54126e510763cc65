//! graph6 encoding, plus a small JSON sidecar for vertex labels.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// `{"graph6": "...", "labels": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledGraph6 {
    pub graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, msg: &str| Error::Parse {
        offset,
        msg: msg.to_string(),
    };
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(pos, "byte outside the printable range 63..=126"));
    }
    let (n, mut pos) = match bytes {
        [] => return Err(err(0, "empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err(bytes.len(), "truncated 8-byte vertex count"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(bytes.len(), "truncated 4-byte vertex count"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::capacity("vertex count", n, MAX_VERTICES));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < nbytes {
        return Err(err(bytes.len(), "edge data is shorter than the vertex count requires"));
    }
    if body.len() > nbytes {
        return Err(err(pos + nbytes, "trailing bytes after edge data"));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            bit += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            pos += nbytes - 1;
            return Err(err(pos, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Parses one record of a graph file: either bare graph6 or a JSON sidecar.
pub fn parse_record(line: &str) -> Result<Graph> {
    let t = line.trim();
    if t.starts_with('{') {
        let rec: LabelledGraph6 = serde_json::from_str(t).map_err(|e| Error::Parse {
            offset: e.column().saturating_sub(1),
            msg: e.to_string(),
        })?;
        let g = from_graph6(&rec.graph6)?;
        match rec.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    } else {
        from_graph6(t)
    }
}

/// Encodes a graph as a record: bare graph6 when unlabelled, sidecar JSON otherwise.
pub fn to_record(g: &Graph) -> String {
    match g.labels() {
        None => to_graph6(g),
        Some(l) => serde_json::to_string(&LabelledGraph6 {
            graph6: to_graph6(g),
            labels: Some(l.to_vec()),
        })
        .expect("serialisable"),
    }
}

/// Parses a newline-separated file of records, skipping blank lines.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_record)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert!(from_graph6("Bw").unwrap().same_adjacency(&Graph::complete(3)));
        assert!(from_graph6("Bg").unwrap().same_adjacency(&Graph::path(3)));
        assert_eq!(to_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(to_graph6(&Graph::path(3)), "Bg");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        // Petersen graph, as printed by the nauty tools.
        let pet = from_graph6("IheA@GUAo").unwrap();
        assert_eq!(pet.n(), 10);
        assert_eq!(pet.edge_count(), 15);
        assert!((0..10).all(|v| pet.degree(v) == 3));
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::path(63);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + 0, 63 + 63][..]);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_input_reports_offset() {
        assert_eq!(
            from_graph6("B w"),
            Err(Error::Parse { offset: 1, msg: "byte outside the printable range 63..=126".into() })
        );
        assert!(matches!(from_graph6("C"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(from_graph6("Bww"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(from_graph6(""), Err(Error::Parse { offset: 0, .. })));
        // 'x' sets a padding bit for n = 3
        assert!(matches!(from_graph6("Bx"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn sidecar_labels() {
        let g = Graph::path(2).with_labels(vec!["a1", "b1"]).unwrap();
        let rec = to_record(&g);
        assert_eq!(rec, r#"{"graph6":"A_","labels":["a1","b1"]}"#);
        assert_eq!(parse_record(&rec).unwrap(), g);
        assert_eq!(parse_record("Bw\n").unwrap(), Graph::complete(3));
    }
}
