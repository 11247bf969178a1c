use super::LocalizeError;
use crate::quasitoric::FixedPointData;

/// Names accepted by [`dataset`].
pub const DATASETS: [&str; 3] = ["s6", "flag3", "cp1"];

/// Bundled fixed-point data: `s6` (the 6-sphere with a `T^2` action), `flag3`
/// (`U(3)/T^3`, weights the permuted roots) and `cp1` (weights `1`, `-1`).
pub fn dataset(name: &str) -> Result<FixedPointData, LocalizeError> {
    let data = match name {
        "s6" => FixedPointData::from_raw(
            3,
            2,
            &[
                (1, vec![vec![1, 0], vec![0, 1], vec![-1, -1]]),
                (1, vec![vec![-1, 0], vec![0, -1], vec![1, 1]]),
            ],
        ),
        "flag3" => {
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let points: Vec<(i8, Vec<Vec<i64>>)> = perms
                .iter()
                .map(|rho| {
                    let mut ws = Vec::new();
                    for i in 0..3 {
                        for j in i + 1..3 {
                            let mut w = vec![0; 3];
                            w[rho[i]] += 1;
                            w[rho[j]] -= 1;
                            ws.push(w);
                        }
                    }
                    (1, ws)
                })
                .collect();
            FixedPointData::from_raw(3, 3, &points)
        }
        "cp1" => FixedPointData::from_raw(1, 1, &[(1, vec![vec![1]]), (1, vec![vec![-1]])]),
        _ => return Err(LocalizeError::UnknownDataset(name.to_string())),
    };
    Ok(data.expect("bundled data is well formed"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(dataset("s6").unwrap().points().len(), 2);
        let flag = dataset("flag3").unwrap();
        assert_eq!(flag.points().len(), 6);
        assert!(flag.points().iter().all(|p| p.sign == 1));
        assert!(matches!(dataset("cp9"), Err(LocalizeError::UnknownDataset(_))));
    }
}
