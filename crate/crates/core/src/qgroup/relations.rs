use crate::error::Result;
use crate::field::{Scalar, Valuation};

use super::rep::Rep;
use super::roots::RootDatum;

/// Outcome of one defining relation on the representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
}

/// Checks the defining relations of `U_q(sl(n))` on the matrices of `rep`:
/// Cartan conjugation of `e_j`, `f_j`, the `[e_i, f_j]` relation, the
/// q-Serre relations for adjacent nodes and commutation for distant ones.
pub fn relation_suite<V: Valuation>(rep: &Rep<V>) -> Result<Vec<RelationCheck>> {
    let datum = RootDatum::a(rep.n() - 1);
    let rank = datum.rank();
    let q = rep.q()?;
    let q_inv = q.inv()?;
    let omega_inv = rep.omega()?.inv()?;
    let q_sum = q.add(&q_inv);
    let mut out = Vec::new();
    let mut push = |name: String, pass: bool| out.push(RelationCheck { name, pass });

    for i in 1..=rank {
        let k = rep.k(i, 1)?;
        let k_inv = rep.k(i, -1)?;
        for j in 1..=rank {
            let a = datum.cartan_entry(i, j);
            let qa = q.pow(a)?;
            let lhs = k.mul(rep.e(j))?.mul(&k_inv)?;
            push(format!("K{i} e{j} K{i}^-1 = q^{a} e{j}"), lhs == rep.e(j).scale(&qa));
            let lhs = k.mul(rep.f(j))?.mul(&k_inv)?;
            push(
                format!("K{i} f{j} K{i}^-1 = q^{} f{j}", -a),
                lhs == rep.f(j).scale(&qa.inv()?),
            );

            let comm = rep.e(i).commutator(rep.f(j))?;
            let rhs = if i == j {
                k.sub(&k_inv)?.scale(&omega_inv)
            } else {
                comm.scale(&V::Elem::zero())
            };
            push(format!("[e{i}, f{j}]"), comm == rhs);

            if a == -1 {
                for (label, x, y) in [("e", rep.e(i), rep.e(j)), ("f", rep.f(i), rep.f(j))] {
                    let serre = x
                        .mul(x)?
                        .mul(y)?
                        .sub(&x.mul(y)?.mul(x)?.scale(&q_sum))?
                        .add(&y.mul(x)?.mul(x)?)?;
                    push(format!("Serre {label}{i}^2 {label}{j}"), serre.is_zero());
                }
            } else if a == 0 {
                push(format!("[e{i}, e{j}] = 0"), rep.e(i).commutator(rep.e(j))?.is_zero());
                push(format!("[f{i}, f{j}] = 0"), rep.f(i).commutator(rep.f(j))?.is_zero());
            }
        }
    }
    Ok(out)
}
