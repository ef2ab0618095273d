//! Graph corpora for the verification suite: exhaustive enumeration up to a
//! vertex count, graph6 files, edge-list files, or a single named graph,
//! optionally narrowed by conjunctive filters.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use crate::edgelist::parse_edge_list;
use crate::enumerate::enumerate_graphs;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::graph6::parse_graph6;

#[derive(Debug, Clone)]
pub enum CorpusSource {
    /// Every isomorphism class with 1..=max_n vertices.
    Enumerate { max_n: usize },
    Graph6File(PathBuf),
    EdgeListFile(PathBuf),
    Named { family: GraphFamily, params: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFilter {
    Connected,
    Chordal,
    Bipartite,
    CameronWalker,
    HeightAtLeast(usize),
}

impl CorpusFilter {
    fn keep(&self, g: &Graph) -> bool {
        match self {
            CorpusFilter::Connected => g.is_connected(),
            CorpusFilter::Chordal => g.is_chordal(),
            CorpusFilter::Bipartite => g.is_bipartite(),
            CorpusFilter::CameronWalker => g.is_cameron_walker(),
            CorpusFilter::HeightAtLeast(k) => g.height() >= *k,
        }
    }
}

impl FromStr for CorpusFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<CorpusFilter> {
        if let Some(k) = s.strip_prefix("height>=") {
            let k = k
                .parse()
                .map_err(|_| Error::Parameter(format!("invalid height bound '{k}'")))?;
            return Ok(CorpusFilter::HeightAtLeast(k));
        }
        match s {
            "connected" => Ok(CorpusFilter::Connected),
            "chordal" => Ok(CorpusFilter::Chordal),
            "bipartite" => Ok(CorpusFilter::Bipartite),
            "cameron-walker" | "cameron_walker" => Ok(CorpusFilter::CameronWalker),
            other => Err(Error::Parameter(format!(
                "unknown filter '{other}' (expected connected, chordal, bipartite, cameron-walker, or height>=K)"
            ))),
        }
    }
}

impl fmt::Display for CorpusFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusFilter::Connected => write!(f, "connected"),
            CorpusFilter::Chordal => write!(f, "chordal"),
            CorpusFilter::Bipartite => write!(f, "bipartite"),
            CorpusFilter::CameronWalker => write!(f, "cameron-walker"),
            CorpusFilter::HeightAtLeast(k) => write!(f, "height>={k}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub source: CorpusSource,
    pub filters: Vec<CorpusFilter>,
}

impl CorpusSpec {
    /// Parses the CLI spelling: `enumerate:N`, `g6file:PATH`,
    /// `edgefile:PATH`, or `named:FAMILY:PARAMS`.
    pub fn parse(source: &str, filters: &[String]) -> Result<CorpusSpec> {
        let source = match source.split_once(':') {
            Some(("enumerate", n)) => {
                let max_n = n
                    .parse()
                    .map_err(|_| Error::Parameter(format!("invalid enumerate bound '{n}'")))?;
                CorpusSource::Enumerate { max_n }
            }
            Some(("g6file", path)) => CorpusSource::Graph6File(PathBuf::from(path)),
            Some(("edgefile", path)) => CorpusSource::EdgeListFile(PathBuf::from(path)),
            Some(("named", rest)) => {
                let (family, params) = rest.split_once(':').unwrap_or((rest, ""));
                let family: GraphFamily = family.parse()?;
                let params = parse_params(params)?;
                CorpusSource::Named { family, params }
            }
            _ => {
                return Err(Error::Parameter(format!(
                    "unknown corpus '{source}' (expected enumerate:N, g6file:PATH, edgefile:PATH, or named:FAMILY:PARAMS)"
                )))
            }
        };
        let filters = filters
            .iter()
            .flat_map(|f| f.split(','))
            .filter(|f| !f.is_empty())
            .map(CorpusFilter::from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(CorpusSpec { source, filters })
    }

    pub fn load(&self) -> Result<Vec<Graph>> {
        let graphs = match &self.source {
            CorpusSource::Enumerate { max_n } => {
                let mut all = Vec::new();
                for n in 1..=*max_n {
                    all.extend(enumerate_graphs(n)?);
                }
                all
            }
            CorpusSource::Graph6File(path) => {
                let text = fs::read_to_string(path)?;
                text.lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(parse_graph6)
                    .collect::<Result<Vec<_>>>()?
            }
            CorpusSource::EdgeListFile(path) => {
                vec![parse_edge_list(&fs::read_to_string(path)?)?]
            }
            CorpusSource::Named { family, params } => {
                vec![Graph::build_named(*family, params)?]
            }
        };
        Ok(graphs
            .into_iter()
            .filter(|g| self.filters.iter().all(|f| f.keep(g)))
            .collect())
    }

    pub fn describe(&self) -> String {
        let src = match &self.source {
            CorpusSource::Enumerate { max_n } => format!("enumerate:{max_n}"),
            CorpusSource::Graph6File(p) => format!("g6file:{}", p.display()),
            CorpusSource::EdgeListFile(p) => format!("edgefile:{}", p.display()),
            CorpusSource::Named { family, params } => {
                format!("named:{family:?}:{params:?}")
            }
        };
        if self.filters.is_empty() {
            src
        } else {
            let fs: Vec<String> = self.filters.iter().map(|f| f.to_string()).collect();
            format!("{src} [{}]", fs.join(","))
        }
    }
}

fn parse_params(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.parse()
                .map_err(|_| Error::Parameter(format!("invalid family parameter '{p}'")))
        })
        .collect()
}
