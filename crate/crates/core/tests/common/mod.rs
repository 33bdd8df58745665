#![allow(dead_code)]

use std::path::Path;

use toric_cy4::Fan;

/// Minimal reader for the bundled `.fan` files (keywords and blocks only).
pub fn load(name: &str) -> Fan {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/fans")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    let (mut dim, mut rays, mut cones) = (0, Vec::new(), Vec::new());
    while let Some(line) = lines.next() {
        let mut it = line.split_whitespace();
        let key = it.next().unwrap();
        let n = it.next().and_then(|v| v.parse::<usize>().ok());
        match key {
            "dim" => dim = n.unwrap(),
            "rays" => {
                for _ in 0..n.unwrap() {
                    rays.push(row(lines.next().unwrap()));
                }
            }
            "cones" => {
                for _ in 0..n.unwrap() {
                    cones.push(row(lines.next().unwrap()));
                }
            }
            _ => {}
        }
    }
    Fan::new(dim, rays, cones).unwrap()
}

fn row<T: std::str::FromStr>(s: &str) -> Vec<T>
where
    T::Err: std::fmt::Debug,
{
    s.split_whitespace().map(|t| t.parse().unwrap()).collect()
}

pub const BUNDLED: [&str; 12] = [
    "cp4.fan",
    "b1.fan",
    "b2.fan",
    "b3.fan",
    "p1xp3.fan",
    "p2xp2.fan",
    "p1xp1xp2.fan",
    "p1x4.fan",
    "v4.fan",
    "s2xs2.fan",
    "s2xs3.fan",
    "s3xs3.fan",
];

/// The quick fans, for property tests that run the full pipeline per case.
pub const SMALL: [&str; 6] = ["cp4.fan", "b1.fan", "b2.fan", "b3.fan", "p1xp3.fan", "p2xp2.fan"];
