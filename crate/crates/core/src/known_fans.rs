//! A few fans that are small enough to write down by hand.

use crate::fan::Fan;

/// Projective 4-space: rays e1..e4 and -(e1+e2+e3+e4); every 4-subset is a cone.
pub fn cp4() -> Fan {
    let rays = vec![
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
        vec![-1, -1, -1, -1],
    ];
    let cones = (0..5)
        .rev()
        .map(|skip| (0..5).filter(|&i| i != skip).collect())
        .collect();
    Fan::new(4, rays, cones).expect("cp4 fan is well formed")
}

/// P(O + O(3)) over P^3, with rays e4, e1, e2, e3, -e4, -e1-e2-e3+3e4.
///
/// The first cone is {e1, e2, e3, -e4}, so eliminating on it leaves the
/// classes of rays 0 and 5 as ring generators.
pub fn b1() -> Fan {
    let rays = vec![
        vec![0, 0, 0, 1],
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, -1],
        vec![-1, -1, -1, 3],
    ];
    // {0,4} and {1,2,3,5} are the primitive collections: a cone is one ray
    // from {0,4} together with three from {1,2,3,5}.
    let mut cones: Vec<Vec<usize>> = Vec::new();
    for fiber in [4, 0] {
        for skip in [5, 3, 2, 1] {
            let mut c: Vec<usize> = [1, 2, 3, 5].into_iter().filter(|&i| i != skip).collect();
            c.push(fiber);
            cones.push(c);
        }
    }
    Fan::new(4, rays, cones).expect("b1 fan is well formed")
}

/// P^1 x P^1 with rays e1, -e1, e2, -e2.
pub fn p1xp1() -> Fan {
    let rays = vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]];
    let cones = vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]];
    Fan::new(2, rays, cones).expect("p1xp1 fan is well formed")
}

/// P^2 with rays e1, e2, -e1-e2.
pub fn p2() -> Fan {
    let rays = vec![vec![1, 0], vec![0, 1], vec![-1, -1]];
    let cones = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
    Fan::new(2, rays, cones).expect("p2 fan is well formed")
}

/// P^1 with rays e1, -e1.
pub fn p1() -> Fan {
    Fan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).expect("p1 fan is well formed")
}
