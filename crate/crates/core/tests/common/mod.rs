#![allow(dead_code)]

use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::PathBuf;

use alphaspec::{parse_graph6, BiPolyZ, Graph, UniPolyZ};
use flate2::read::GzDecoder;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// The geng catalogue of all graphs on `n` vertices, for `n <= 9`.
pub fn catalogue(n: usize) -> Box<dyn BufRead + Send> {
    let plain = data(&format!("graphs{n}.g6"));
    if plain.exists() {
        return Box::new(BufReader::new(File::open(plain).unwrap()));
    }
    let gz = File::open(data(&format!("graphs{n}.g6.gz"))).unwrap();
    Box::new(BufReader::new(GzDecoder::new(gz)))
}

pub fn catalogue_text(n: usize) -> String {
    let mut s = String::new();
    catalogue(n).read_to_string(&mut s).unwrap();
    s
}

pub fn graphs(n: usize) -> Vec<Graph> {
    read_graphs(catalogue(n))
}

pub fn graphs_in(path: &std::path::Path) -> Vec<Graph> {
    read_graphs(BufReader::new(File::open(path).unwrap()))
}

fn read_graphs(input: impl BufRead) -> Vec<Graph> {
    input
        .lines()
        .map(|l| parse_graph6(l.unwrap().trim().as_bytes()).unwrap())
        .collect()
}

/// The 9-vertex polynomial printed with the cospectral pair, as
/// `(sign, alpha-coefficients highest first)` for `x^9` down to `x^0`.
pub fn printed_pair_polynomial() -> BiPolyZ {
    let rows: [(i64, &[i64]); 10] = [
        (1, &[1]),
        (-1, &[36, 0]),
        (1, &[556, 36, -18]),
        (-1, &[4806, 1042, -542, 14]),
        (1, &[25393, 12578, -6513, 60, 67]),
        (-1, &[83826, 81818, -39908, -2746, 1634, -60]),
        (1, &[168450, 308434, -130253, -34080, 14391, -576, -62]),
        (-1, &[187812, 669816, -207004, -159042, 57080, -188, -1064, 46]),
        (1, &[88560, 768822, -96837, -331528, 99686, 9946, -5173, 272, 12]),
        (-1, &[354240, 60948, -256002, 57690, 20308, -6952, 54, 122, -8]),
    ];
    BiPolyZ::new(
        rows.iter()
            .map(|(sign, high)| {
                let low: Vec<i64> = high.iter().rev().map(|c| sign * c).collect();
                UniPolyZ::from_i64(&low)
            })
            .collect(),
    )
}
