"""Multi-restart oscillator solves with rounding and certificates."""
import asyncio
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from app.controllers import graph_controller
from app.controllers.coupling_controller import resolve_coupling
from app.controllers.dynamics_controller import (
    align_phases,
    detect_binarization,
    energy_general,
    energy_penalized,
    general_field,
    integrate_rkf45,
    penalized_field,
    penalty_energy,
    random_phases,
)
from app.controllers.ising_controller import cut_value, maxcut_to_ising, spins_from_phases
from app.controllers.rounding_controller import best_line_round, certify_lower_bound
from app.models import (
    Graph,
    IntegrationOptions,
    PenaltyParams,
    RestartResult,
    RunConfig,
    SolveResult,
    Trajectory,
)
from app.utils.graph_io import read_graph_file
from app.utils.export import write_json, write_trajectory_csv

logger = logging.getLogger(__name__)


class Flow:
    """Vector field and energies of one coupling choice on one graph."""

    def __init__(self, graph: Graph, run: RunConfig):
        self.dynamics_coupling, self.exact_coupling = resolve_coupling(run.coupling)
        self.labels = graph_controller.component_labels(graph)
        mu = run.mu
        if run.coupling == "cos":
            model = maxcut_to_ising(graph)
            self.field = penalized_field(model, PenaltyParams.from_mu(mu, run.k_coupling))
            self.energy_exact: Callable[[np.ndarray], float] = lambda theta: energy_penalized(theta, model, mu)
            self.energy_smooth = self.energy_exact
        else:
            smooth = self.dynamics_coupling
            exact = self.exact_coupling
            self.field = general_field(graph, smooth, mu=mu, k_coupling=run.k_coupling)
            self.energy_exact = lambda theta: energy_general(theta, graph, exact) + penalty_energy(theta, mu)
            self.energy_smooth = lambda theta: energy_general(theta, graph, smooth) + penalty_energy(theta, mu)


def load_graph(run: RunConfig) -> Graph:
    """Graph named by the run: an edge-list file or a seeded generator."""
    if run.graph_file:
        return read_graph_file(Path(run.graph_file))
    if run.generator:
        return graph_controller.generate(run.generator, n=run.n, p=run.p, d=run.d, seed=run.graph_seed)
    raise ValueError("run needs a graph file or a generator")


def integration_options(run: RunConfig) -> IntegrationOptions:
    return IntegrationOptions(
        rtol=run.rtol,
        atol=run.atol,
        t_max=run.t_max,
        grad_tol=run.grad_tol,
        record_every=run.record_every,
    )


def run_restart(graph: Graph, run: RunConfig, index: int, flow: Optional[Flow] = None) -> tuple[RestartResult, Trajectory]:
    """Integrate one seeded start, then round and certify its final phases."""
    flow = flow or Flow(graph, run)
    seed = run.restart_seed(index)
    theta0 = random_phases(graph.n, seed)
    trajectory = integrate_rkf45(
        flow.field,
        theta0,
        integration_options(run),
        energy=flow.energy_exact,
        energy_smooth=flow.energy_smooth,
    )
    final = trajectory.final_state
    if run.mu == 0:
        # unpenalized flow is rotation invariant per component; fix the gauge before binarizing
        final = align_phases(final, flow.labels)

    sign_spins = spins_from_phases(final)
    sign_cut = cut_value(graph, sign_spins)
    line = best_line_round(final, graph, run.rounding_trials, seed=[seed])
    if line is not None and line.cut > sign_cut:
        cut, spins, line_cut = line.cut, line.spins, line.cut
    else:
        cut, spins = sign_cut, sign_spins.tolist()
        line_cut = line.cut if line is not None else sign_cut

    certificate = certify_lower_bound(final, graph, flow.exact_coupling, mu=run.mu) if graph.edges else None
    result = RestartResult(
        restart=index,
        seed=seed,
        terminated_by=trajectory.terminated_by,
        final_time=trajectory.final_time,
        steps=trajectory.steps,
        energy_exact=trajectory.energies[-1],
        energy_smooth=trajectory.energies_smooth[-1],
        sign_cut=sign_cut,
        line_cut=line_cut,
        cut=cut,
        spins=[int(s) for s in spins],
        phases=final.tolist(),
        binarization=detect_binarization(final, run.eps),
        certificate=certificate,
    )
    logger.info(
        f"restart {index} (seed {seed}): {trajectory.terminated_by} at t={trajectory.final_time:.4g}, "
        f"cut={cut}, binarized={result.binarization.all_binarized}"
    )
    return result, trajectory


def pick_best(results: list[RestartResult]) -> RestartResult:
    """Highest cut, then lowest exact energy, then lowest restart index."""
    return min(results, key=lambda r: (-r.cut, r.energy_exact, r.restart))


async def solve(graph: Graph, run: RunConfig) -> tuple[SolveResult, dict[int, Trajectory]]:
    """Run all restarts concurrently; the reduction is independent of completion order."""
    flow = Flow(graph, run)
    outcomes = await asyncio.gather(
        *(asyncio.to_thread(run_restart, graph, run, index, flow) for index in range(run.restarts))
    )
    results = [result for result, _ in outcomes]
    trajectories = {result.restart: trajectory for result, trajectory in outcomes}
    best = pick_best(results)
    solution = SolveResult(
        config=run,
        config_hash=run.config_hash(),
        created_at=datetime.now(timezone.utc).isoformat(),
        n=graph.n,
        num_edges=graph.num_edges,
        total_weight=graph.total_weight(),
        best=best,
        restarts=results,
    )
    return solution, trajectories


def all_failed(solution: SolveResult) -> bool:
    return all(r.terminated_by == "step-failure" for r in solution.restarts)


def write_outputs(solution: SolveResult, trajectories: dict[int, Trajectory]) -> None:
    """Write the result JSON and the best restart's trajectory CSV when requested."""
    run = solution.config
    if run.output:
        write_json(solution, Path(run.output))
    if run.trajectory_csv:
        best = solution.best
        metadata = {
            "config": run.model_dump(),
            "config_hash": solution.config_hash,
            "restart": best.restart,
            "seed": best.seed,
            "coupling": run.coupling,
            "mu": run.mu,
            "rtol": run.rtol,
            "atol": run.atol,
            "grad_tol": run.grad_tol,
            "t_max": run.t_max,
            "terminated_by": best.terminated_by,
        }
        write_trajectory_csv(trajectories[best.restart], Path(run.trajectory_csv), metadata)
