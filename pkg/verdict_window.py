import logging
import sys

from PyQt6.QtWidgets import (QApplication, QMainWindow, QWidget, QVBoxLayout, QHBoxLayout,
                             QPushButton, QLabel, QTableWidget, QTableWidgetItem, QFileDialog,
                             QTabWidget, QMessageBox)
from PyQt6.QtCore import Qt, QThread, pyqtSignal

from functions import DEFAULT_SETTINGS, dump_document, read_instance
from hilbert import PointSet, hilbert_profile
from identify import identify
from window_protection import CircularProgressDialog, protect_window

logger = logging.getLogger(__name__)

KIND_COLORS = {
    "IdentifiableSmallRank": "#16a34a",
    "IdentifiableTerracini": "#16a34a",
    "Inconclusive": "#d97706",
    "RankDeficient": "#dc2626",
}


def verdict_rows(verdict):
    """(field, value) pairs shown in the summary table"""
    rows = [
        ("Verdict", verdict.kind.value),
        ("r", str(verdict.r)),
        ("n", str(verdict.n)),
        ("rank of M_d", str(verdict.rank_of_Md)),
    ]
    if verdict.terracini is not None:
        rows.append(("Terracini rank", f"{verdict.terracini.q} of {3 * verdict.r}"))
        rows.append(("Terracini dimension", f"{verdict.terracini.projective_dimension} "
                                            f"(expected {verdict.terracini.expected})"))
    if verdict.position is not None:
        rows.append(("Max collinear", str(verdict.position.max_collinear)))
        rows.append(("Max on a conic", str(verdict.position.max_on_conic)))
        rows.append(("In a cubic", "yes" if verdict.position.in_cubic else "no"))
    if verdict.obstruction is not None:
        rows.append(("Obstruction", verdict.obstruction.kind.value))
    rows.append(("Multiplications", str(verdict.counter.multiplications)))
    rows.extend(("Note", note) for note in verdict.notes)
    return rows


def profile_rows(profile):
    return [(str(d), str(h), str(dh)) for d, (h, dh) in enumerate(zip(profile.h, profile.dh))]


class IdentifyWorker(QThread):
    progress = pyqtSignal(int, str)
    finished = pyqtSignal(dict)
    error = pyqtSignal(str)

    def __init__(self, file_path, strict=False):
        super().__init__()
        self.file_path = file_path
        self.strict = strict

    def run(self):
        try:
            self.progress.emit(10, "Reading instance...")
            inst = read_instance(self.file_path, strict=self.strict)

            self.progress.emit(30, "Running identify...")
            verdict = identify(inst, diagnostics=True)

            self.progress.emit(80, "Hilbert profile...")
            profile = hilbert_profile(PointSet(inst.points))

            self.progress.emit(100, "Done")
            self.finished.emit({"instance": inst, "verdict": verdict, "profile": profile})
        except Exception as e:
            logger.error(f"Could not check {self.file_path}: {e}")
            self.error.emit(str(e))


@protect_window
class VerdictWindow(QMainWindow):
    def __init__(self, settings=None, parent=None):
        super().__init__(parent)
        self.settings = settings or DEFAULT_SETTINGS
        self.inst = None
        self.verdict = None
        self.profile = None
        self.worker = None
        self.setWindowTitle("Waring Identifiability")
        self.setup_ui()

    def setup_ui(self):
        central = QWidget(self)
        layout = QVBoxLayout(central)

        buttons = QHBoxLayout()
        self.open_button = QPushButton("Open Instance")
        self.open_button.clicked.connect(lambda: self.open_instance())
        self.export_button = QPushButton("Export Verdict")
        self.export_button.clicked.connect(lambda: self.export_verdict())
        buttons.addWidget(self.open_button)
        buttons.addWidget(self.export_button)
        buttons.addStretch()
        layout.addLayout(buttons)

        self.kind_label = QLabel("No instance loaded")
        self.kind_label.setAlignment(Qt.AlignmentFlag.AlignCenter)
        self.kind_label.setStyleSheet("font-size: 18px; font-weight: bold;")
        layout.addWidget(self.kind_label)

        tabs = QTabWidget()
        self.summary_table = self._table(["Field", "Value"])
        self.points_table = self._table(["#", "Point", "Coefficient"])
        self.profile_table = self._table(["d", "h", "Dh"])
        tabs.addTab(self.summary_table, "Verdict")
        tabs.addTab(self.points_table, "Points")
        tabs.addTab(self.profile_table, "Hilbert Function")
        layout.addWidget(tabs)

        self.setCentralWidget(central)
        self.resize(720, 560)

    def _table(self, headers):
        table = QTableWidget(0, len(headers))
        table.setHorizontalHeaderLabels(headers)
        table.horizontalHeader().setStretchLastSection(True)
        table.setEditTriggers(QTableWidget.EditTrigger.NoEditTriggers)
        return table

    def _fill(self, table, rows):
        table.setRowCount(len(rows))
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                table.setItem(i, j, QTableWidgetItem(value))
        table.resizeColumnsToContents()

    def open_instance(self, path=None):
        if path is None:
            path, _ = QFileDialog.getOpenFileName(self, "Open Instance", "", "Instance Files (*.json);;All Files (*)")
        if path:
            self.load_instance(path)

    def load_instance(self, path):
        progress_dialog = CircularProgressDialog(self)
        progress_dialog.setLabelText("Checking instance...")
        progress_dialog.show()

        self.worker = IdentifyWorker(path)
        self.worker.progress.connect(progress_dialog.setValue)
        self.worker.finished.connect(lambda result: self.on_identified(result, progress_dialog))
        self.worker.error.connect(lambda message: self.on_error(message, progress_dialog))
        self.worker.start()

    def on_identified(self, result, progress_dialog=None):
        if progress_dialog:
            progress_dialog.close()
        self.is_analyzing = False
        self.inst = result["instance"]
        self.verdict = result["verdict"]
        self.profile = result["profile"]
        self.update_summary()
        self.update_points()
        self.update_profile()

    def on_error(self, message, progress_dialog=None):
        if progress_dialog:
            progress_dialog.close()
        self.is_analyzing = False
        self.kind_label.setText("Error")
        self.kind_label.setStyleSheet("font-size: 18px; font-weight: bold; color: #dc2626;")
        logger.error(message)
        QMessageBox.critical(self, "Error", f"Could not check the instance: {message}")

    def update_summary(self):
        kind = self.verdict.kind.value
        self.kind_label.setText(kind)
        self.kind_label.setStyleSheet(
            f"font-size: 18px; font-weight: bold; color: {KIND_COLORS.get(kind, '#1e293b')};")
        self._fill(self.summary_table, verdict_rows(self.verdict))

    def update_points(self):
        self._fill(self.points_table, [
            (str(i), str(p), str(a))
            for i, (p, a) in enumerate(zip(self.inst.points, self.inst.coefficients))
        ])

    def update_profile(self):
        self._fill(self.profile_table, profile_rows(self.profile))

    def export_verdict(self, path=None):
        if path is None:
            path, _ = QFileDialog.getSaveFileName(self, "Export Verdict", "verdict.json", "JSON Files (*.json)")
        if path:
            dump_document(self.verdict.to_document(), path)
            return path
        return None


def main_func(path=None, settings=None):
    app = QApplication.instance() or QApplication(sys.argv)
    app.setStyle("Fusion")

    window = VerdictWindow(settings)
    window.show()
    if path:
        window.open_instance(path)
    return app.exec()
