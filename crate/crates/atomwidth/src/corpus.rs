//! Seeded corpora of (C4, P6)-free atoms written to a directory with a manifest.

use std::fs;
use std::io;
use std::path::Path;
use std::thread;

use atomwidth_core::generators::{self, GenError};
use atomwidth_core::{atoms, search, Graph, Pattern};
use serde::{Deserialize, Serialize};

use crate::formats::GraphJson;

/// Environment variable naming the default corpus directory.
pub const CORPUS_DIR_VAR: &str = "ATOMWIDTH_CORPUS_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub file: String,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub predicates: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub base_seed: u64,
    pub n_max: usize,
    pub entries: Vec<Entry>,
}

/// Graph file contents: graph JSON plus the seed that produced it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeededGraph {
    pub seed: u64,
    #[serde(flatten)]
    pub graph: GraphJson,
}

const PREDICATES: [&str; 3] = ["c4-free", "p6-free", "atom"];

/// Item `i` uses seed `base_seed + i`.
pub fn item_seed(base_seed: u64, i: usize) -> u64 {
    base_seed.wrapping_add(i as u64)
}

fn verified(g: &Graph) -> bool {
    search::is_free(g, &[Pattern::Cycle(4), Pattern::Path(6)]) && atoms::is_atom(g)
}

/// Generates `count` atoms with at most `n_max` vertices on `jobs` threads.
pub fn generate(count: usize, n_max: usize, base_seed: u64, jobs: usize) -> Result<Vec<(u64, Graph)>, GenError> {
    let jobs = jobs.clamp(1, count.max(1));
    let seeds: Vec<u64> = (0..count).map(|i| item_seed(base_seed, i)).collect();
    let chunks: Vec<&[u64]> = seeds.chunks(count.div_ceil(jobs).max(1)).collect();
    let results: Vec<Result<Vec<(u64, Graph)>, GenError>> = thread::scope(|s| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| s.spawn(move || chunk.iter().map(|&seed| generators::random_c4p6free_atom(n_max, seed).map(|g| (seed, g))).collect()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("generator thread panicked")).collect()
    });
    let mut out = Vec::with_capacity(count);
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Writes `atom_NNNNN.json` files and `manifest.json`, re-verifying every graph first.
pub fn write(dir: &Path, base_seed: u64, n_max: usize, graphs: &[(u64, Graph)]) -> io::Result<Manifest> {
    fs::create_dir_all(dir)?;
    let mut entries = Vec::with_capacity(graphs.len());
    for (i, (seed, g)) in graphs.iter().enumerate() {
        if !verified(g) {
            return Err(io::Error::other(format!("graph for seed {seed} failed verification")));
        }
        let file = format!("atom_{i:05}.json");
        let body = SeededGraph { seed: *seed, graph: GraphJson::of(g) };
        fs::write(dir.join(&file), serde_json::to_string(&body).map_err(io::Error::other)?)?;
        entries.push(Entry { file, seed: *seed, n: g.n(), m: g.m(), predicates: PREDICATES.iter().map(|s| s.to_string()).collect() });
    }
    let manifest = Manifest { base_seed, n_max, entries };
    fs::write(dir.join("manifest.json"), serde_json::to_string_pretty(&manifest).map_err(io::Error::other)?)?;
    Ok(manifest)
}

/// Reads a corpus back, checking each graph against its manifest entry.
pub fn load(dir: &Path) -> io::Result<(Manifest, Vec<Graph>)> {
    let manifest: Manifest = serde_json::from_str(&fs::read_to_string(dir.join("manifest.json"))?).map_err(io::Error::other)?;
    let mut graphs = Vec::with_capacity(manifest.entries.len());
    for e in &manifest.entries {
        let sg: SeededGraph = serde_json::from_str(&fs::read_to_string(dir.join(&e.file))?).map_err(io::Error::other)?;
        let g = sg.graph.to_graph().map_err(io::Error::other)?;
        if sg.seed != e.seed || g.n() != e.n || g.m() != e.m {
            return Err(io::Error::other(format!("{} does not match the manifest", e.file)));
        }
        graphs.push(g);
    }
    Ok((manifest, graphs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threads_do_not_change_the_corpus() {
        let a = generate(9, 10, 5, 1).unwrap();
        let b = generate(9, 10, 5, 4).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|(_, g)| verified(g) && g.n() <= 10));
    }

    #[test]
    fn write_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let graphs = generate(4, 9, 100, 2).unwrap();
        let m = write(dir.path(), 100, 9, &graphs).unwrap();
        let (m2, back) = load(dir.path()).unwrap();
        assert_eq!(m, m2);
        assert_eq!(back, graphs.into_iter().map(|(_, g)| g).collect::<Vec<_>>());
    }
}
