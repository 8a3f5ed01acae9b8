from typing import Literal

import pandas as pd

from src.cli.dto import RunReport
from src.data.data_manager import DataManager
from src.validation.selftest import SelftestSummary

OutputFormat = Literal["table", "csv", "json"]

BOUND_TABLE_COLUMNS = ["method", "n", "lower", "upper", "width_n"]
BOUND_CSV_COLUMNS = ["method", "n", "lower", "lower_rounding", "upper", "upper_rounding", "width_n", "ratio",
                     "lower_radicand", "upper_radicand", "certified", "loose", "note", "partial"]
Q_COLUMNS = ["n", "q", "q_at_lower", "q_at_upper", "partial"]


def _csv(df: pd.DataFrame) -> str:
    return df.to_csv(index=False, lineterminator="\n")


class ReportWriter:
    """Renders reports as text; all numbers are already strings, so output is byte-stable."""

    def __init__(self, output: OutputFormat):
        self.output = output

    def bound(self, report: RunReport) -> str:
        if self.output == "json":
            return report.model_dump_json(indent=2) + "\n"

        df = DataManager.create_dataframe(report.bounds)
        if df.empty:
            df = pd.DataFrame(columns=BOUND_CSV_COLUMNS)
        df["partial"] = report.partial
        if self.output == "csv":
            return _csv(df[BOUND_CSV_COLUMNS])

        lines = [df[BOUND_TABLE_COLUMNS].to_string(index=False)]
        if report.best is not None:
            lines.append(f"best: [{report.best.lower}, {report.best.upper}] "
                         f"from {report.best.lower_source} / {report.best.upper_source}")
        if not report.certified:
            lines.append("not certified: float arithmetic")
        if report.partial:
            lines.append(f"PARTIAL: frontier budget exceeded after length {report.partial_length}")
        return "\n".join(lines) + "\n"

    def growth(self, report: RunReport) -> str:
        if self.output == "json":
            return report.model_dump_json(indent=2) + "\n"

        growth = report.growth
        verification = growth.verification if growth else None
        q = pd.DataFrame(columns=Q_COLUMNS)
        if verification is not None:
            q = pd.DataFrame({"n": verification.n, "q": verification.q, "q_at_lower": verification.q_at_lower,
                              "q_at_upper": verification.q_at_upper})
        q["partial"] = report.partial
        if self.output == "csv":
            return _csv(q)

        if growth is None:
            return "all matrices are zero: ‖Σⁿ‖ = 0, no growth order\n"

        components = DataManager.create_dataframe(growth.components)
        lines = [
            components[["index", "vertices", "trivial", "critical", "depth", "lambda_lower", "lambda_upper"]]
            .to_string(index=False),
            f"r = {growth.r}, path {growth.path}, witness chain {growth.witness_chain}",
            f"λ in [{growth.lambda_lower}, {growth.lambda_upper}]",
        ]
        if verification is not None:
            lines.append(q.drop(columns="partial").to_string(index=False))
            lines.append(f"alpha = {verification.alpha}, beta = {verification.beta}, slope = {verification.slope}")
        if growth.message:
            lines.append(growth.message)
        if report.partial:
            lines.append(f"PARTIAL: frontier budget exceeded after length {report.partial_length}")
        return "\n".join(lines) + "\n"

    def converge(self, df: pd.DataFrame, partial_length: int = None) -> str:
        df = df.copy()
        df["partial"] = partial_length is not None
        if self.output == "json":
            return df.to_json(orient="records", indent=2) + "\n"
        if self.output == "csv":
            return _csv(df)

        text = df.to_string(index=False) + "\n"
        if partial_length is not None:
            text += f"PARTIAL: frontier budget exceeded after length {partial_length}\n"
        return text

    def selftest(self, summary: SelftestSummary) -> str:
        df = pd.DataFrame([
            {"check": r.name, "checked": r.checked, "violations": len(r.violations),
             "status": "ok" if r.passed else "FAILED"}
            for r in summary.reports
        ])
        if self.output == "json":
            return df.to_json(orient="records", indent=2) + "\n"
        if self.output == "csv":
            return _csv(df)

        lines = [df.to_string(index=False)]
        for report in summary.failed:
            lines.extend(f"{report.name}: {v}" for v in report.violations[:5])
        lines.append("PASSED" if summary.passed else f"FAILED: {len(summary.failed)} checks")
        return "\n".join(lines) + "\n"
