"""
Linha de comando: compile, simulate, verify, reck, oracle, hamiltonian

Relatórios vão para stdout (legíveis ou --json); logs e diagnósticos para stderr.
Códigos de saída: 0 sucesso, 3 esquema, 4 compilação/domínio, 5 verificação.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from app.core.config import CLI_CONFIG, VERIFY_CONFIG
from app.core.exceptions import EXIT_OK, EXIT_VERIFICATION, BoqcError, SchemaError
from app.core.log import configure_logging
from app.services.hamiltonianos_service import HamiltonianosService
from app.services.oraculo_service import OraculoPermanenteService
from app.services.pipeline_service import PipelineService
from app.services.verificacao_service import VerificacaoService
from app.utils.csv_export import distribution_csv, histogram_csv
from app.utils.serializacao import dumps_circuit, to_qasm
from app.utils.text_utils import decode_upload, human_report, to_json

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1


def _read_text(path: str) -> str:
    content = Path(path).read_bytes()
    text = decode_upload(content)
    if text is None:
        raise SchemaError(f"Não foi possível decodificar o arquivo {path}")
    return text


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
    logger.info("💾 Arquivo salvo: %s", path)


def _emit(title: str, data: dict, as_json: bool, report_path: Optional[str]) -> None:
    if report_path:
        _write_text(report_path, to_json(data))
    sys.stdout.write(to_json(data) if as_json else human_report(title, data))


def _load_matrix(args):
    if args.haar is not None:
        return HamiltonianosService.haar_random_unitary(args.haar, args.seed)
    if not args.matrix:
        raise SchemaError("Informe um arquivo de matriz ou --haar M")
    return PipelineService.parse_matrix_file(_read_text(args.matrix))


def cmd_compile(args) -> int:
    model_file = PipelineService.parse_model_file(_read_text(args.model))
    circuit, report = PipelineService.compile_model(model_file, args.target, args.optimize, args.steps)
    text = dumps_circuit(circuit)
    if args.qasm:
        _write_text(args.qasm, to_qasm(circuit))
    data = report.model_dump()
    if args.output == "-":
        sys.stdout.write(text)
        if args.report:
            _write_text(args.report, to_json(data))
        return EXIT_OK
    _write_text(args.output, text)
    _emit("Relatório de compilação", data, args.json, args.report)
    return EXIT_OK


def cmd_simulate(args) -> int:
    model_file = PipelineService.parse_model_file(_read_text(args.model))
    report = PipelineService.simulate_model(model_file, args.shots, args.seed)
    if args.csv:
        _write_text(args.csv, histogram_csv(report.counts))
    _emit("Relatório de simulação", report.model_dump(), args.json, args.report)
    return EXIT_OK


def cmd_verify(args) -> int:
    summary = VerificacaoService.run(args.suite)
    data = summary.model_dump()
    _emit("Verificação", data, args.json, args.report)
    if not summary.passed:
        print(f"❌ VerificationFailed: suites com falha: {', '.join(summary.failed_suites)}", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_reck(args) -> int:
    report = PipelineService.reck_report(_load_matrix(args))
    _emit("Malha de Reck", report.model_dump(), args.json, args.report)
    return EXIT_OK


def cmd_oracle(args) -> int:
    R = _load_matrix(args)
    inputs = [int(n) for n in args.input]
    if args.cutoff is not None:
        report = OraculoPermanenteService.compare_with_circuit(R, inputs, args.cutoff, args.steps)
        data = report.model_dump()
        rows = [(tuple(p.occupations), p.probability) for p in report.oracle_distribution]
    else:
        distribution = OraculoPermanenteService.output_distribution(R, inputs)
        rows = distribution.rows()
        data = {
            "modes": int(R.shape[0]),
            "input": inputs,
            "total": distribution.total(),
            "distribution": [{"occupations": list(occ), "probability": p} for occ, p in rows],
        }
    if args.csv:
        _write_text(args.csv, distribution_csv(rows))
    _emit("Oráculo de permanentes", data, args.json, args.report)
    return EXIT_OK


def cmd_hamiltonian(args) -> int:
    model_file = PipelineService.parse_model_file(_read_text(args.model))
    h = HamiltonianosService.hamiltonian(model_file.model)
    sys.stdout.write(h.render() + "\n")
    return EXIT_OK


def _add_report_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--report", help="Salva o relatório JSON neste caminho")
    parser.add_argument("--json", action="store_true", help="Relatório JSON em stdout")


def _add_matrix_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("matrix", nargs="?", help='Arquivo JSON {"R": [[...]]}')
    parser.add_argument("--haar", type=int, help="Gera uma unitária de Haar com M modos")
    parser.add_argument("--seed", type=int, default=CLI_CONFIG["default_seed"], help="Semente para --haar")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boqc", description="Compilador bóson→qubit e verificação")
    parser.add_argument("--log-level", help="Nível de log (padrão: BOQC_LOG_LEVEL ou WARNING)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="Compila um arquivo de modelo em circuito")
    p.add_argument("model", help="Arquivo de modelo boqc-model/1")
    p.add_argument("-o", "--output", default="-", help="Arquivo do circuito (padrão: stdout)")
    p.add_argument("--target", choices=["zx", "cnot"], help="Conjunto de portas alvo")
    p.add_argument("--optimize", dest="optimize", action="store_true", default=None)
    p.add_argument("--no-optimize", dest="optimize", action="store_false")
    p.add_argument("--steps", type=int, help="Passos de Trotter")
    p.add_argument("--qasm", help="Exporta também em OpenQASM 2.0")
    _add_report_flags(p)
    p.set_defaults(handler=cmd_compile)

    p = sub.add_parser("simulate", help="Compila, simula e amostra")
    p.add_argument("model", help="Arquivo de modelo boqc-model/1")
    p.add_argument("--shots", type=int, help="Número de disparos")
    p.add_argument("--seed", type=int, help="Semente da amostragem")
    p.add_argument("--csv", help="Exporta o histograma em CSV")
    _add_report_flags(p)
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("verify", help="Executa as suites de invariantes")
    p.add_argument("--suite", default="all", choices=VERIFY_CONFIG["suites"] + ["all"])
    _add_report_flags(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("reck", help="Fatora uma unitária em malha triangular")
    _add_matrix_source(p)
    _add_report_flags(p)
    p.set_defaults(handler=cmd_reck)

    p = sub.add_parser("oracle", help="Distribuição de saída por permanentes")
    _add_matrix_source(p)
    p.add_argument("--input", nargs="+", required=True, help="Ocupações de entrada por modo")
    p.add_argument("--cutoff", type=int, help="Compara com o circuito compilado neste N_P")
    p.add_argument("--steps", type=int, default=VERIFY_CONFIG["hom_steps"], help="Passos de Trotter da comparação")
    p.add_argument("--csv", help="Exporta a distribuição do oráculo em CSV")
    _add_report_flags(p)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("hamiltonian", help="Imprime a expansão de Pauli do modelo")
    p.add_argument("model", help="Arquivo de modelo boqc-model/1")
    p.set_defaults(handler=cmd_hamiltonian)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except BoqcError as exc:
        print(f"❌ {type(exc).__name__}: {exc.message}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"❌ {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
