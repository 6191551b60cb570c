//! Published q = 7 generators for f(x) = x^4 + 5x^2 + 4x + 3, stored in
//! `data/q7_generators.txt`.

use covarray_core::construct::half_generators;
use covarray_core::gf::FieldTower;

const POLY: [u8; 5] = [3, 4, 5, 0, 1];

/// Three blocks of four rows each, highest coordinate first.
fn published() -> Vec<Vec<Vec<u8>>> {
    let text = include_str!("data/q7_generators.txt");
    let rows: Vec<Vec<u8>> = text
        .lines()
        .filter(|l| l.starts_with(|c: char| c.is_ascii_digit()))
        .map(|l| l.split_whitespace().map(|w| w.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 12);
    rows.chunks(4).map(|c| c.to_vec()).collect()
}

#[test]
fn q7_half_generators_match_published_matrices() {
    let tower = FieldTower::build(7, 1, 4, Some(&POLY)).unwrap();
    let gens = half_generators(&tower).unwrap();
    for (g, expected) in gens.iter().zip(published()) {
        assert_eq!(g.cols(), 25);
        for (printed_row, want) in expected.iter().enumerate() {
            let coord = 3 - printed_row;
            let got: Vec<u8> = (0..25).map(|c| g.entry(coord, c)).collect();
            assert_eq!(&got, want, "coordinate {coord}");
        }
    }
}

#[test]
fn q7_ovoid_point_one() {
    let tower = FieldTower::build(7, 1, 4, Some(&POLY)).unwrap();
    assert_eq!(tower.decompose(8).as_slice(), &[4, 1, 5, 5]);
}
