//! Graph sources: family specs ("name:arg1:arg2"), graph6 strings, and
//! edge-list files. Each graph argument takes exactly one source.

use clap::Args;
use theta_core::graph::{families, graph6, FamilySpec, Graph};

#[derive(Args, Clone)]
pub struct GraphArgs {
    /// Family spec, e.g. petersen, cycle:7, kneser:5:2, latin:3:5,
    /// symplectic:3:2, hamming:5:3:5, windmill:5:8, paley:13, hanoi:3.
    /// Repeat for commands that take two graphs.
    #[arg(long)]
    pub family: Vec<String>,
    /// graph6 string. Repeatable, see --family.
    #[arg(long)]
    pub graph6: Vec<String>,
    /// Path to an edge-list file (u v per line, # comments).
    #[arg(long)]
    pub edges: Vec<std::path::PathBuf>,
}

pub fn parse_family(spec: &str) -> Result<FamilySpec, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let arg = |k: usize| -> Result<usize, String> {
        parts
            .get(k)
            .ok_or_else(|| format!("family `{}` needs at least {k} argument(s)", parts[0]))?
            .parse::<usize>()
            .map_err(|e| format!("bad argument {k} in `{spec}`: {e}"))
    };
    let arg64 = |k: usize| -> Result<u64, String> { arg(k).map(|v| v as u64) };
    let spec = match parts[0].to_ascii_lowercase().as_str() {
        "complete" | "k" => FamilySpec::Complete(arg(1)?),
        "empty" => FamilySpec::Empty(arg(1)?),
        "cycle" | "c" => FamilySpec::Cycle(arg(1)?),
        "path" | "p" => FamilySpec::Path(arg(1)?),
        "multipartite" => {
            let sizes: Result<Vec<usize>, String> = (1..parts.len()).map(arg).collect();
            FamilySpec::CompleteMultipartite(sizes?)
        }
        "star" => FamilySpec::Star(arg(1)?),
        "kneser" => FamilySpec::Kneser(arg(1)?, arg(2)?),
        "petersen" => FamilySpec::Kneser(5, 2),
        "paley" => FamilySpec::Paley(arg64(1)?),
        "hamming" | "hammingband" => FamilySpec::HammingBand(arg(1)?, arg(2)?, arg(3)?),
        "latin" | "latinsquare" => FamilySpec::LatinSquare(arg(1)?, arg(2)?),
        "symplectic" | "sp" => FamilySpec::Symplectic(arg(1)?, arg64(2)?),
        "windmill" => FamilySpec::Windmill(arg(1)?, arg(2)?),
        "hanoi" | "hanoi3" => FamilySpec::Hanoi3(arg(1)?),
        "tietze" => FamilySpec::Tietze,
        "shrikhande" => FamilySpec::Shrikhande,
        other => return Err(format!("unknown family `{other}`")),
    };
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs_parse() {
        assert_eq!(parse_family("petersen").unwrap(), FamilySpec::Kneser(5, 2));
        assert_eq!(parse_family("cycle:7").unwrap(), FamilySpec::Cycle(7));
        assert_eq!(parse_family("latin:3:5").unwrap(), FamilySpec::LatinSquare(3, 5));
        assert_eq!(parse_family("hamming:5:3:5").unwrap(), FamilySpec::HammingBand(5, 3, 5));
        assert_eq!(parse_family("sp:3:2").unwrap(), FamilySpec::Symplectic(3, 2));
        assert_eq!(
            parse_family("multipartite:2:3:4").unwrap(),
            FamilySpec::CompleteMultipartite(vec![2, 3, 4])
        );
        assert!(parse_family("kneser:5").is_err());
        assert!(parse_family("nosuch:1").is_err());
        assert!(parse_family("cycle:x").is_err());
    }

    #[test]
    fn exactly_one_source_enforced() {
        let none = GraphArgs { family: vec![], graph6: vec![], edges: vec![] };
        assert!(none.build_single().is_err());
        let two = GraphArgs {
            family: vec!["petersen".into(), "cycle:5".into()],
            graph6: vec![],
            edges: vec![],
        };
        assert!(two.build_single().is_err());
        assert!(two.build_pair().is_ok());
    }
}

impl GraphArgs {
    fn build_all(&self) -> Result<Vec<Graph>, Box<dyn std::error::Error>> {
        let mut out = Vec::new();
        for f in &self.family {
            out.push(families::construct(&parse_family(f)?)?);
        }
        for s in &self.graph6 {
            out.push(graph6::decode(s)?);
        }
        for path in &self.edges {
            let text = std::fs::read_to_string(path)?;
            out.push(graph6::parse_edge_list(&text)?);
        }
        Ok(out)
    }

    pub fn build_single(&self) -> Result<Graph, Box<dyn std::error::Error>> {
        let graphs = self.build_all()?;
        match graphs.len() {
            1 => Ok(graphs.into_iter().next().unwrap()),
            k => Err(format!("expected exactly one graph source, got {k}").into()),
        }
    }

    pub fn build_pair(&self) -> Result<(Graph, Graph), Box<dyn std::error::Error>> {
        let graphs = self.build_all()?;
        match graphs.len() {
            2 => {
                let mut it = graphs.into_iter();
                Ok((it.next().unwrap(), it.next().unwrap()))
            }
            k => Err(format!(
                "expected exactly two graph sources (family specs first, then graph6, then edge files), got {k}"
            )
            .into()),
        }
    }
}
