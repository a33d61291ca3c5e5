//! graph6 codec (bit-exact standard layout) and plain edge-list text IO.

use super::{Graph, GraphError};

/// Encode a graph in graph6 format.
///
/// Header is N(n); body packs the upper triangle column-wise, six bits
/// per byte (MSB first), each byte offset by 63.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
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
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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

/// Decode a graph6 string.
pub fn decode(s: &str) -> Result<Graph, GraphError> {
    let bytes = s.trim_end().as_bytes();
    let fail = |offset: usize, msg: &str| {
        Err(GraphError::Graph6 { offset, msg: msg.to_string() })
    };
    if bytes.is_empty() {
        return fail(0, "empty input");
    }
    let pos: usize;
    let read6 = |b: u8, at: usize| -> Result<usize, GraphError> {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6 {
                offset: at,
                msg: format!("byte {b} out of graph6 range 63..=126"),
            });
        }
        Ok((b - 63) as usize)
    };
    let n;
    if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return fail(bytes.len(), "truncated 36-bit order header");
            }
            let mut acc = 0usize;
            for k in 0..6 {
                acc = (acc << 6) | read6(bytes[2 + k], 2 + k)?;
            }
            n = acc;
            pos = 8;
        } else {
            if bytes.len() < 4 {
                return fail(bytes.len(), "truncated 18-bit order header");
            }
            let mut acc = 0usize;
            for k in 0..3 {
                acc = (acc << 6) | read6(bytes[1 + k], 1 + k)?;
            }
            n = acc;
            pos = 4;
        }
    } else {
        n = read6(bytes[0], 0)?;
        pos = 1;
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos != need {
        return fail(
            bytes.len().min(pos + need),
            &format!("body length {} does not match order {n} (expected {need} bytes)", bytes.len() - pos),
        );
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for (k, &b) in bytes[pos..].iter().enumerate() {
        let v = read6(b, pos + k)?;
        for t in 0..6 {
            if bit >= nbits {
                if v >> (5 - t) & 1 == 1 {
                    return fail(pos + k, "nonzero padding bits");
                }
                continue;
            }
            if v >> (5 - t) & 1 == 1 {
                let (i, j) = pair_from_index(bit);
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Inverse of the column-wise upper-triangle ordering:
/// bit k corresponds to the pair (i, j), j chosen so k < j(j+1)/2.
fn pair_from_index(k: usize) -> (usize, usize) {
    let mut j = 1usize;
    let mut base = 0usize;
    while base + j <= k {
        base += j;
        j += 1;
    }
    (k - base, j)
}

/// Parse a plain edge-list: one `u v` pair per line, 0-indexed,
/// whitespace-separated, `#` starts a comment. The vertex count is
/// `max label + 1` unless a larger `n` is given on a line `n <count>`.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| GraphError::EdgeList { line: lineno + 1, msg };
        if toks[0] == "n" {
            if toks.len() != 2 {
                return Err(err("expected `n <count>`".into()));
            }
            let count: usize =
                toks[1].parse().map_err(|e| err(format!("bad vertex count: {e}")))?;
            n = n.max(count);
            continue;
        }
        if toks.len() != 2 {
            return Err(err(format!("expected two vertex labels, got {}", toks.len())));
        }
        let u: usize = toks[0].parse().map_err(|e| err(format!("bad vertex: {e}")))?;
        let v: usize = toks[1].parse().map_err(|e| err(format!("bad vertex: {e}")))?;
        if u == v {
            return Err(err("self-loops are not allowed".into()));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, &edges))
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
