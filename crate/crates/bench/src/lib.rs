//! Instance families for naive versus weight-reduced computation, shared by
//! the criterion benchmarks and the `rectsym bench` subcommand.

use std::time::{Duration, Instant};

use rectsym_core::coefficients::{CoefficientValue, Engine, Family};
use rectsym_core::partitions::Partition;
use rectsym_core::symmetries::{execute_reduction, reduce_kronecker, reduce_plethysm, ReductionReport};
use rectsym_core::Result;

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub family: Family,
    pub indices: Vec<Partition>,
}

impl Instance {
    pub fn weight(&self) -> usize {
        self.indices[2].weight()
    }

    pub fn plan(&self) -> Result<ReductionReport> {
        let [a, b, c] = [&self.indices[0], &self.indices[1], &self.indices[2]];
        match self.family {
            Family::Plethysm => reduce_plethysm(a, b, c),
            _ => reduce_kronecker(a, b, c),
        }
    }
}

/// `((d^k), (d^k), (d^k))`.
pub fn rectangle_triple(d: u32, k: usize) -> Instance {
    let r = Partition::rectangle(d, k);
    Instance {
        name: format!("kronecker ({d}^{k})^3"),
        family: Family::Kronecker,
        indices: vec![r.clone(), r.clone(), r],
    }
}

/// `λ = (1)`, `μ = ν = (k,k)`.
pub fn plethysm_two_row(k: u32) -> Instance {
    let mu = Partition::new(vec![k, k]);
    Instance {
        name: format!("plethysm (1) ({k},{k})"),
        family: Family::Plethysm,
        indices: vec![Partition::new(vec![1]), mu.clone(), mu],
    }
}

/// The default benchmark set.
pub fn default_instances() -> Vec<Instance> {
    vec![
        rectangle_triple(2, 3),
        rectangle_triple(3, 6),
        rectangle_triple(3, 8),
        plethysm_two_row(3),
        plethysm_two_row(4),
        plethysm_two_row(5),
    ]
}

/// Coefficient of the instance itself, on a fresh engine.
pub fn naive(inst: &Instance) -> Result<CoefficientValue> {
    let mut e = Engine::new();
    let ix = &inst.indices;
    Ok(match inst.family {
        Family::Plethysm => CoefficientValue::Integer(e.plethysm(&ix[0], &ix[1], &ix[2])?),
        _ => CoefficientValue::Integer(e.kronecker(&ix[0], &ix[1], &ix[2])),
    })
}

/// Plans the reduction, then computes the reduced coefficient on a fresh
/// engine.
pub fn reduced(inst: &Instance) -> Result<CoefficientValue> {
    let report = inst.plan()?;
    let Some(ix) = &report.reduced else {
        return Ok(CoefficientValue::Integer(0.into()));
    };
    let mut e = Engine::new();
    Ok(match inst.family {
        Family::Plethysm => CoefficientValue::Integer(e.plethysm(&ix[0], &ix[1], &ix[2])?),
        _ => CoefficientValue::Integer(e.kronecker(&ix[0], &ix[1], &ix[2])),
    })
}

/// Both coefficients, which must agree.
pub fn check(inst: &Instance) -> Result<(CoefficientValue, CoefficientValue)> {
    let report = inst.plan()?;
    execute_reduction(&mut Engine::new(), &report)
}

pub fn median_time<T>(reps: usize, mut f: impl FnMut() -> T) -> Duration {
    let mut times: Vec<Duration> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed()
        })
        .collect();
    times.sort();
    times[times.len() / 2]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_weights() {
        assert_eq!(rectangle_triple(2, 3).plan().unwrap().weight_after, 2);
        assert_eq!(rectangle_triple(3, 8).plan().unwrap().weight_after, 3);
        for k in 1..=5 {
            assert_eq!(plethysm_two_row(k).plan().unwrap().weight_after, 0);
        }
    }

    #[test]
    fn paths_agree() {
        for inst in default_instances() {
            let (a, b) = check(&inst).unwrap();
            assert_eq!(a, b, "{}", inst.name);
            assert_eq!(reduced(&inst).unwrap(), a);
        }
        assert_eq!(naive(&rectangle_triple(2, 3)).unwrap(), CoefficientValue::Integer(1.into()));
    }
}
