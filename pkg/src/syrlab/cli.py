# File: cli.py
# Description: Command-line entry point for the verifiers and experiments.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import argparse
import logging
import math
import os
import sys
from fractions import Fraction

import numpy as np

from syrlab.codes.descent import Descent
from syrlab.codes.dyadic_decomposition import DyadicDecompositionService
from syrlab.codes.injectivity import Injectivity
from syrlab.codes.syracuse_code import CodeMap
from syrlab.collatz.classical import ClassicalLemmas
from syrlab.dyadic.coeff_array import CoeffArray
from syrlab.errors import ConfigError, EnumerationLimitError, InvariantViolation
from syrlab.experiment.config import ExperimentConfig, load_config
from syrlab.experiment.hash_service import HashService
from syrlab.experiment.run_manifest import RunManifest
from syrlab.experiment.verification_report import VerificationReport
from syrlab.geometric.clt import CentralLimit
from syrlab.geometric.cylinder import CylinderMeasure
from syrlab.geometric.geom_params import GeomParams, GeometricSampler
from syrlab.output.file_type import ReportFormat
from syrlab.output.handler.csv_handler import CsvHandler
from syrlab.output.handler.json_handler import JsonHandler
from syrlab.output.handler.pbm_handler import PbmHandler
from syrlab.paths.path_sample import PathDensity
from syrlab.spectral.measure import MeasureZ2p, Spectral
from syrlab.spectral.pushforward import Pushforward
from syrlab.spectral.segments import SegmentDecomposition


_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVARIANT_FAILURE = 1
EXIT_USAGE = 2

_LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


class _Outcome:
    """
    What a subcommand hands back: the report body, an optional plot table and the pass flag.
    """

    def __init__(self, contents: dict, rows: list = None, passed: bool = True, matrix=None) -> None:
        self.contents = contents
        self.rows = rows
        self.passed = passed
        self.matrix = matrix


def _int_list(text: str) -> tuple:
    return tuple(int(part) for part in text.split(',') if part.strip())


def _config_from_args(args) -> ExperimentConfig:
    config = load_config(args.config) if args.config else ExperimentConfig()
    overrides = {
        'mu': getattr(args, 'mu', None),
        'k': getattr(args, 'k', None),
        # p_cap bounds measure tables; codes thm210 reads its own residue width
        'p': getattr(args, 'p', None) if args.command != 'codes' else None,
        'n_max': getattr(args, 'nmax', None) if args.command in ('pushforward', 'spectrum') else None,
        'nsamples': args.samples,
        'seed': args.seed,
        'threads': args.threads,
        'c': getattr(args, 'c', None),
        'M': getattr(args, 'M', None),
        'segmentation': getattr(args, 'segmentation', None),
    }
    return config.with_overrides(**overrides)


def _reports_outcome(reports: list) -> _Outcome:
    contents = {report.name: report.to_dict() for report in reports}
    return _Outcome(contents, passed=all(report.passed for report in reports))


def _cmd_verify(args, config: ExperimentConfig) -> _Outcome:
    if args.target == 'classical':
        reports = ClassicalLemmas.verify_classical(args.nmax or 100000, config.seed)
        return _reports_outcome(list(reports.values()))

    if args.target == 'collisions':
        mu = Fraction(args.mu) if args.mu is not None else Fraction(3, 2)
        k = args.k if args.k is not None else 6
        n = args.n if args.n is not None else 9
        return _reports_outcome([Injectivity.collision_experiment(mu, k, n)])

    if args.target == 'descent':
        nsamples = args.samples or 10000
        sampler = GeometricSampler(GeomParams(config.mu, config.seed))
        lemma_2_8 = VerificationReport('lemma_2_8')
        descent = VerificationReport('corollary_4_2')
        conditions_met = 0
        descended = 0
        for _ in range(nsamples):
            code = sampler.sample_code(config.k)
            try:
                conditions_met += Descent.check_lemma_2_8(code, config.alpha)['conditions_met']
                lemma_2_8.record(True, {'code': code.xs})
            except InvariantViolation as violation:
                lemma_2_8.record(False, violation.instance)

            # reported only: the corollary needs r large, so small k says nothing
            outcome = Descent.verify_corollary_4_2_descent(code, config.k)
            if outcome['conditions_met']:
                descent.checks += 1
                descended += outcome['descended']
        lemma_2_8.details = {'samples': nsamples, 'conditions_met': conditions_met}
        descent.details = {'conditions_met': descent.checks, 'descended': descended}
        return _reports_outcome([lemma_2_8, descent])

    # segments
    segmentation = config.resolved_segmentation()
    decomposition = VerificationReport('segment_decomposition')
    array = CoeffArray()
    n_max = config.n_max or None
    for xi in range(1 << config.p):
        decomposition.run(SegmentDecomposition.product_decomposition_check, config.mu, config.k, config.p,
                          segmentation, xi, n_max, config.state_cap, array, xi=xi)

    root_sums = VerificationReport('root_sum_identity')
    rng = np.random.default_rng(config.seed)
    worst = 0.0
    for _ in range(1000):
        b = rng.random(int(rng.integers(1, 51)))
        error = SegmentDecomposition.root_sum_magnitude(b)['relative_error']
        worst = max(worst, error)
        root_sums.record(error <= 1e-10, {'t': len(b), 'relative_error': error})
    root_sums.details = {'max_relative_error': worst}

    return _reports_outcome([decomposition, root_sums])


def _cmd_array(args, config: ExperimentConfig) -> _Outcome:
    rows, cols = args.rows, args.cols
    if rows < 1 or cols < 1:
        raise ValueError('rows and cols must be positive')

    matrix = CoeffArray().dump(rows, cols)
    lines = [''.join(str(int(bit)) for bit in row) for row in matrix]
    contents = {
        'rows': rows,
        'cols': cols,
        'periods': [CoeffArray.row_period(i) for i in range(1, rows + 1)],
        'bits': lines,
    }
    table = [{'i': i, 'j': j, 'a': int(matrix[i - 1, j])} for i in range(1, rows + 1) for j in range(cols)]

    return _Outcome(contents, table, matrix=matrix)


def _cmd_codes(args, config: ExperimentConfig) -> _Outcome:
    if args.target == 'roundtrip':
        nmax = args.nmax or 1 << 16
        kmax = args.kmax or 20
        report = VerificationReport('code_round_trip')
        for n in range(1, nmax, 2):
            for k in range(1, kmax + 1):
                code = CodeMap.integer_to_code(n, k)
                is_ok = (CodeMap.code_to_integer(code) - n) % (1 << code.n) == 0
                report.record(is_ok, {'N': n, 'k': k})
        report.details = {'nmax': nmax, 'kmax': kmax}
        return _reports_outcome([report])

    nsamples = args.samples or 10000
    kmax = args.k or args.kmax or 30
    p = args.p or 128
    sampler = GeometricSampler(GeomParams(config.mu, config.seed))
    rng = np.random.default_rng(config.seed)
    array = CoeffArray()
    report = VerificationReport('theorem_2_10')
    a_values, a1_values = [], []
    for _ in range(nsamples):
        code = sampler.sample_code(int(rng.integers(1, kmax + 1)))
        try:
            decomposition = DyadicDecompositionService.verify_thm_2_10(code, p, array)
        except InvariantViolation as violation:
            report.record(False, {'code': code.xs, **violation.instance, 'message': str(violation)})
            continue
        a_values.append(decomposition.A)
        a1_values.append(decomposition.A1)
        report.record(0 <= decomposition.A <= code.k, {'code': code.xs, 'A': decomposition.A})
        report.run(CodeMap.syr_k_closed_form, code, code=code.xs)
    report.details = {
        'samples': nsamples,
        'k': kmax,
        'p': p,
        'max_A': max(a_values, default=None),
        'min_A1': min(a1_values, default=None),
        'max_A1': max(a1_values, default=None),
    }

    return _reports_outcome([report])


def _cmd_geom(args, config: ExperimentConfig) -> _Outcome:
    if args.target == 'clt':
        nsamples = args.samples or config.nsamples
        params = GeomParams(config.mu, config.seed)
        result = CentralLimit.clt_check(params, config.k, nsamples, args.method)
        table = CentralLimit.clt_table(params, config.k, nsamples, method=args.method)
        return _Outcome(dict(result, mu=config.mu), table)

    n = args.n or 200
    table = []
    for k in range(1, n):
        point = CylinderMeasure.asymptotics_point(n, k, config.mu)
        table.append({'n': n, 'k': k, 'nu': point.nu, 'g': point.g_value, 'lambda_nu': point.lambda_nu,
                      'exact': float(point.exact), 'asymptotic': point.asymptotic, 'ratio': point.ratio})
    return _Outcome({'mu': config.mu, 'n': n, 'points': len(table)}, table)


def _measure_outcome(measure: MeasureZ2p, config: ExperimentConfig, mode: str, subset: tuple) -> _Outcome:
    deviation = Spectral.uniformity_deviation(measure)
    spectrum = Spectral.dft(measure)
    inversion_sum = Spectral.inversion_bound(spectrum, measure)

    contents = {
        'mode': mode,
        'mu': config.mu,
        'k': config.k,
        'p': config.p,
        'mass': list(measure.mass),
        'tail_mass': measure.tail_mass,
        'uniformity': deviation,
        'inversion_sum': inversion_sum,
        'within_c1': float(deviation['max_dev']) <= config.c1 * 2.0 ** -config.p,
    }
    if measure.stderr is not None:
        contents['stderr'] = measure.stderr
    if subset:
        contents['set_probability'] = Spectral.set_probability(measure, subset, config.k, config.c1)

    stderr = measure.stderr if measure.stderr is not None else [None] * measure.size
    table = [{'m': m, 'mass': float(measure.mass[m]), 'stderr': stderr[m]} for m in range(measure.size)]

    return _Outcome(contents, table)


def _cmd_pushforward(args, config: ExperimentConfig) -> _Outcome:
    subset = _int_list(args.subset) if args.subset else ()
    if args.mc:
        mode = 'mc'
    elif config.n_max:
        mode = 'exact'
    else:
        # no cutoff: the closed-form limit
        mode = 'limit'

    measure = Pushforward.measure_for_mode(mode, config)
    return _measure_outcome(measure, config, mode, subset)


def _cmd_spectrum(args, config: ExperimentConfig) -> _Outcome:
    result = Pushforward.spectral_scan(config.mu, config.k, config.p, args.mode, config)
    return _Outcome(result, result['rows'])


def _cmd_paths(args, config: ExperimentConfig) -> _Outcome:
    if args.target == 'density':
        result = PathDensity.density_tail_experiment(config.mu, config.k, config.p, config.c, config.nsamples,
                                                     config.seed, config.threads, config.shard_size)
    else:
        result = PathDensity.conjecture_4_12_experiment(config.mu, config.k, config.p, config.M, config.c_window,
                                                        config.nsamples, config.seed, config.threads,
                                                        config.shard_size)
    return _Outcome(result, [result])


def _cmd_report(args, config: ExperimentConfig) -> _Outcome:
    ks = _int_list(args.ks)
    if not ks:
        raise ValueError('at least one k is required')

    table = []
    for k in ks:
        measure = Pushforward.pushforward_mc(config.mu, k, config.p, config.nsamples, config.seed, config.threads,
                                             config.shard_size)
        deviation = Spectral.uniformity_deviation(measure)
        maximum, argmax = Spectral.dft(measure).max_nonzero()
        density = PathDensity.density_tail_experiment(config.mu, k, config.p, config.c, config.nsamples,
                                                      config.seed, config.threads, config.shard_size)
        table.append({
            'k': k,
            'max_dev': deviation['max_dev'],
            'tv': deviation['tv'],
            'max_nonzero_xi_modulus': maximum,
            'argmax': argmax,
            'c2_estimate': -math.log2(maximum) / k if maximum > 0 else math.inf,
            'frac_exceptional': density['frac_exceptional'],
            'ci_low': density['ci_low'],
            'ci_high': density['ci_high'],
        })

    deviations = [row['max_dev'] for row in table]
    contents = {
        'label': 'evidence, not proof',
        'mu': config.mu,
        'p': config.p,
        'nsamples': config.nsamples,
        'rows': table,
        'deviation_non_increasing': all(b <= a for a, b in zip(deviations, deviations[1:])),
        'last_deviation_within_quarter_uniform': deviations[-1] <= 0.25 * 2.0 ** -config.p,
    }
    return _Outcome(contents, table)


def build_parser() -> argparse.ArgumentParser:
    """
    :return: argparse.ArgumentParser, with one subparser per subcommand
    """

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=str, default=None, help='key = value configuration file')
    common.add_argument('--threads', type=int, default=None, help='worker processes, 0 for the default')
    common.add_argument('--seed', type=int, default=None)
    common.add_argument('--samples', type=int, default=None, help='Monte Carlo sample count')
    common.add_argument('--output', type=str, default=None, help='report path, stdout if omitted')
    common.add_argument('--format', type=str, default='json', choices=['json', 'csv', 'pbm'])
    common.add_argument('--verbose', action='store_true')
    common.add_argument('--debug', action='store_true')

    parser = argparse.ArgumentParser(prog='syrlab', description='Syracuse codes, dyadic arrays and pushforwards')
    sub = parser.add_subparsers(dest='command', required=True)

    p_verify = sub.add_parser('verify', parents=[common], help='exact verification suites')
    p_verify.add_argument('target', choices=['classical', 'collisions', 'descent', 'segments'])
    p_verify.add_argument('--nmax', type=int, default=None)
    p_verify.add_argument('--mu', type=str, default=None)
    p_verify.add_argument('--k', type=int, default=None)
    p_verify.add_argument('--n', type=int, default=None)
    p_verify.add_argument('--p', type=int, default=None)
    p_verify.add_argument('--segmentation', type=_int_list, default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_array = sub.add_parser('array', parents=[common], help='coefficient array dumps')
    p_array.add_argument('target', choices=['dump'])
    p_array.add_argument('--rows', type=int, default=16)
    p_array.add_argument('--cols', type=int, default=64)
    p_array.set_defaults(func=_cmd_array)

    p_codes = sub.add_parser('codes', parents=[common], help='code round trips and the dyadic decomposition')
    p_codes.add_argument('target', choices=['roundtrip', 'thm210'])
    p_codes.add_argument('--nmax', type=int, default=None)
    p_codes.add_argument('--kmax', type=int, default=None)
    p_codes.add_argument('--k', type=int, default=None, help='largest sampled code length for thm210')
    p_codes.add_argument('--mu', type=str, default=None)
    p_codes.add_argument('--p', type=int, default=None, help='residue width for thm210, not bounded by p_cap')
    p_codes.set_defaults(func=_cmd_codes)

    p_geom = sub.add_parser('geom', parents=[common], help='geometric model checks')
    p_geom.add_argument('target', choices=['clt', 'asymptotics'])
    p_geom.add_argument('--mu', type=str, default=None)
    p_geom.add_argument('--k', type=int, default=None)
    p_geom.add_argument('--n', type=int, default=None)
    p_geom.add_argument('--method', type=str, default='sums', choices=['sums', 'draws'])
    p_geom.set_defaults(func=_cmd_geom)

    p_push = sub.add_parser('pushforward', parents=[common], help='the pushforward measure on Z/2^pZ')
    p_push.add_argument('--mu', type=str, default=None)
    p_push.add_argument('--k', type=int, default=None)
    p_push.add_argument('--p', type=int, default=None)
    mode = p_push.add_mutually_exclusive_group()
    mode.add_argument('--exact', action='store_true', help='exact, without cutoff unless --nmax is given')
    mode.add_argument('--mc', action='store_true', help='Monte Carlo')
    p_push.add_argument('--nmax', type=int, default=None)
    p_push.add_argument('--subset', type=str, default=None, help='comma-separated residues for the set bound')
    p_push.set_defaults(func=_cmd_pushforward)

    p_spectrum = sub.add_parser('spectrum', parents=[common], help='Fourier scan of the pushforward')
    p_spectrum.add_argument('target', choices=['scan'])
    p_spectrum.add_argument('--mu', type=str, default=None)
    p_spectrum.add_argument('--k', type=int, default=None)
    p_spectrum.add_argument('--p', type=int, default=None)
    p_spectrum.add_argument('--mode', type=str, default='exact', choices=['exact', 'limit', 'mc'])
    p_spectrum.add_argument('--nmax', type=int, default=None)
    p_spectrum.set_defaults(func=_cmd_spectrum)

    p_paths = sub.add_parser('paths', parents=[common], help='path-bit density experiments')
    p_paths.add_argument('target', choices=['density', 'window'])
    p_paths.add_argument('--mu', type=str, default=None)
    p_paths.add_argument('--k', type=int, default=None)
    p_paths.add_argument('--p', type=int, default=None)
    p_paths.add_argument('--c', type=float, default=None)
    p_paths.add_argument('--M', type=int, default=None)
    p_paths.set_defaults(func=_cmd_paths)

    p_report = sub.add_parser('report', parents=[common], help='evidence report over several k')
    p_report.add_argument('--mu', type=str, default=None)
    p_report.add_argument('--p', type=int, default=None)
    p_report.add_argument('--ks', type=str, default='16,32,64')
    p_report.add_argument('--c', type=float, default=None)
    p_report.set_defaults(func=_cmd_report)

    return parser


def _configure_logging(args) -> None:
    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(level=level, format=_LOG_FORMAT)


def _emit(args, manifest: dict, outcome: _Outcome) -> None:
    report_format = ReportFormat.from_name(args.format)

    if report_format == ReportFormat.REPORT_FORMAT_JSON or outcome.rows is None and outcome.matrix is None:
        if args.output:
            JsonHandler.write(manifest, args.output)
            _logger.info('wrote %s, sha256 %s', args.output, HashService.calculate_file_hash(args.output))
            print(f'{args.command}: {"passed" if outcome.passed else "FAILED"}, report {args.output}')
        else:
            sys.stdout.write(JsonHandler.dumps(manifest))
        return

    if report_format == ReportFormat.REPORT_FORMAT_PBM:
        if outcome.matrix is None:
            raise ValueError('pbm output is only available for array dumps')
        if not args.output:
            raise ValueError('pbm output needs --output')
        PbmHandler.write(outcome.matrix, args.output)
    elif args.output:
        CsvHandler.write(outcome.rows, args.output)
    else:
        sys.stdout.write(CsvHandler.dumps(outcome.rows))

    if args.output:
        # the JSON report always accompanies a table or bitmap
        report_path = os.path.splitext(args.output)[0] + '.json'
        JsonHandler.write(manifest, report_path)
        print(f'{args.command}: {"passed" if outcome.passed else "FAILED"}, report {report_path}')


def run(argv: list = None) -> int:
    """
    Parse argv, run the subcommand and write its report.

    :param argv: list, arguments without the program name, sys.argv[1:] if None
    :return: int, 0 on success, 1 if an invariant failed, 2 on a usage or configuration error
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return EXIT_OK if exit_request.code in (0, None) else EXIT_USAGE

    _configure_logging(args)
    try:
        config = _config_from_args(args)
        manifest = RunManifest(args.command, _manifest_parameters(args, config), config.seed)
        outcome = args.func(args, config)
        _emit(args, manifest.finish(outcome.contents), outcome)
    except InvariantViolation as violation:
        _logger.error('invariant failed: %s %s', violation, violation.instance)
        print(f'{args.command}: invariant failed: {violation}', file=sys.stderr)
        return EXIT_INVARIANT_FAILURE
    except ConfigError as error:
        print(f'{args.command}: configuration error: {error}', file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError, FileNotFoundError, EnumerationLimitError) as error:
        print(f'{args.command}: {error}', file=sys.stderr)
        return EXIT_USAGE

    return EXIT_OK if outcome.passed else EXIT_INVARIANT_FAILURE


def _manifest_parameters(args, config: ExperimentConfig) -> dict:
    """
    Resolved configuration overlaid with the flags that were actually given. The worker count is left out so
    the digest does not depend on it.
    """

    parameters = config.to_dict()
    del parameters['threads']
    excluded = {'func', 'config', 'output', 'format', 'verbose', 'debug', 'threads'}
    parameters.update({key: value for key, value in vars(args).items()
                       if key not in excluded and value is not None})

    return parameters


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
