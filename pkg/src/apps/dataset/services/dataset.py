from pathlib import Path

import numpy as np
import pandas as pd
from pandas.errors import EmptyDataError, ParserError

import constants
from apps.dataset.exceptions import (
    EmptyDatasetException,
    EmptyFileException,
    MissingLabelException,
    NonNumericCellException,
    RaggedRowException,
    UnknownLabelColumn,
)
from apps.dataset.schemas import Dataset, DatasetSummary, RawTable
from config import settings
from core.exceptions import ParseError
from core.utils import logger


class DatasetService:
    """
    Service with methods to load, clean and describe UCI-style CSV datasets.

    Missing data is handled by attribute deletion only: a feature column that
    contains the missing marker anywhere is dropped, rows are never dropped.
    """

    def __init__(
        self, missing_marker: str | None = None, delimiter: str | None = None
    ) -> None:
        """
        Create a DatasetService.

        Parameters:
            missing_marker (str | None): Token marking a missing cell; defaults to
                `settings.MISSING_MARKER`.
            delimiter (str | None): Cell separator; defaults to `settings.DELIMITER`.
        """
        self.missing_marker = (
            settings.MISSING_MARKER if missing_marker is None else missing_marker
        )
        self.delimiter = settings.DELIMITER if delimiter is None else delimiter

    #  MARK: - Load CSV
    # *======================================== Load CSV ========================================
    def load_csv(
        self, path: str | Path, label_column: str | int = -1, has_header: bool = True
    ) -> RawTable:
        """
        Read a delimiter-separated file into a RawTable, keeping every cell verbatim.

        Parameters:
            path (str | Path): File to read.
            label_column (str | int): Header name or position (negative counts from
                the end) of the class-label column.
            has_header (bool): Whether the first line holds column names.

        Returns:
            RawTable: The rows and column names of the file.

        Raises:
            ParseError: If the file is missing, empty or not parseable.
            RaggedRowException: If a row has a different number of cells.
            UnknownLabelColumn: If the label column does not exist.
        """
        path = Path(path)
        if not path.is_file():
            raise ParseError(f"File {path} does not exist.")
        try:
            frame = pd.read_csv(
                path,
                sep=self.delimiter,
                header=0 if has_header else None,
                dtype=object,
                keep_default_na=False,
                na_filter=False,
                engine="python",
            )
        except EmptyDataError:
            raise EmptyFileException(constants.EMPTY_FILE.format(path=path))
        except ParserError as exc:
            raise RaggedRowException(f"{path}: {exc}")

        if frame.empty:
            raise ParseError(constants.NO_DATA_ROWS.format(path=path))

        # short rows come back padded with None cells
        padded = frame.isna().any(axis=1).to_numpy()
        if padded.any():
            position = int(np.argmax(padded))
            row = frame.iloc[position]
            raise RaggedRowException(
                constants.RAGGED_ROW.format(
                    row=position + 1,
                    actual=int(row.notna().sum()),
                    expected=frame.shape[1],
                )
            )

        if has_header:
            column_names = [str(name).strip() for name in frame.columns]
        else:
            column_names = [f"column_{i}" for i in range(frame.shape[1])]

        return RawTable(
            rows=frame.to_numpy(dtype=object).tolist(),
            column_names=column_names,
            missing_marker=self.missing_marker,
            label_index=self._resolve_label(label_column, column_names),
            source=str(path),
        )

    @staticmethod
    def _resolve_label(label_column: str | int, column_names: list[str]) -> int:
        if isinstance(label_column, str):
            if label_column in column_names:
                return column_names.index(label_column)
            try:
                label_column = int(label_column)
            except ValueError:
                raise UnknownLabelColumn(
                    constants.UNKNOWN_LABEL_COLUMN.format(
                        column=label_column, available=", ".join(column_names)
                    )
                )
        width = len(column_names)
        if not -width <= label_column < width:
            raise UnknownLabelColumn(
                constants.UNKNOWN_LABEL_COLUMN.format(
                    column=label_column, available=f"indices -{width}..{width - 1}"
                )
            )
        return label_column % width

    #  MARK: - Clean
    # *======================================== Clean ========================================
    def clean_by_attribute_deletion(self, raw: RawTable) -> Dataset:
        """
        Drop every feature column that contains the missing marker and parse the rest.

        Parameters:
            raw (RawTable): Table as loaded.

        Returns:
            Dataset: Numeric features, contiguous class ids in first-appearance
                order, and the dropped column names in its provenance.

        Raises:
            MissingLabelException: If a label cell is missing.
            NonNumericCellException: If a surviving cell is not a finite number.
            EmptyDatasetException: If every feature column is dropped.
        """
        cells = pd.DataFrame(raw.rows, dtype=str).apply(lambda column: column.str.strip())
        marker = raw.missing_marker.strip()

        labels = cells[raw.label_index]
        missing_labels = ((labels == marker) | (labels == "")).to_numpy()
        if missing_labels.any():
            raise MissingLabelException(
                constants.MISSING_LABEL.format(row=int(np.argmax(missing_labels)) + 1)
            )

        kept: list[int] = []
        dropped: list[str] = []
        for index in raw.feature_indices:
            if (cells[index] == marker).any():
                dropped.append(raw.column_names[index])
            else:
                kept.append(index)
        if not kept:
            raise EmptyDatasetException

        features = np.empty((len(cells), len(kept)), dtype=float)
        for position, index in enumerate(kept):
            values = pd.to_numeric(cells[index], errors="coerce").to_numpy(dtype=float)
            invalid = ~np.isfinite(values)
            if invalid.any():
                row = int(np.argmax(invalid))
                raise NonNumericCellException(
                    constants.NON_NUMERIC_CELL.format(
                        column=raw.column_names[index],
                        row=row + 1,
                        cell=raw.rows[row][index],
                    )
                )
            features[:, position] = values

        codes, uniques = pd.factorize(labels, sort=False)
        logger.info(
            f"Attribute deletion on {raw.source or 'table'} kept {len(kept)} of "
            f"{len(raw.feature_indices)} feature columns"
        )
        if dropped:
            logger.debug(f"Dropped columns: {', '.join(dropped)}")

        provenance = f"{raw.source or 'table'}: attribute deletion"
        if dropped:
            provenance += f" dropped {len(dropped)} column(s) [{', '.join(dropped)}]"
        else:
            provenance += " dropped nothing"

        return Dataset(
            features=features,
            labels=codes,
            feature_names=[raw.column_names[i] for i in kept],
            class_names=[str(name) for name in uniques],
            label_name=raw.label_name,
            dropped_columns=dropped,
            provenance=provenance,
        )

    def load(
        self, path: str | Path, label_column: str | int = -1, has_header: bool = True
    ) -> Dataset:
        """
        Load and clean a file in one step.
        """
        return self.clean_by_attribute_deletion(
            self.load_csv(path, label_column=label_column, has_header=has_header)
        )

    #  MARK: - Summary
    # *======================================== Summary ========================================
    @staticmethod
    def summarize(ds: Dataset) -> DatasetSummary:
        """
        Count instances, features and classes of a dataset.

        Parameters:
            ds (Dataset): A cleaned dataset.

        Returns:
            DatasetSummary: Structure of the dataset with class counts ordered by id.
        """
        counts = np.bincount(ds.labels, minlength=ds.n_classes)
        return DatasetSummary(
            n_instances=ds.n_instances,
            n_features=ds.n_features,
            n_classes=ds.n_classes,
            class_counts=[int(count) for count in counts],
            class_percentages=[float(100.0 * count / ds.n_instances) for count in counts],
            class_names=ds.class_names,
            n_dropped_columns=len(ds.dropped_columns),
            dropped_columns=ds.dropped_columns,
            provenance=ds.provenance,
        )

    #  MARK: - Canonical CSV
    # *======================================== Canonical CSV ========================================
    @staticmethod
    def to_csv(ds: Dataset, path: str | Path | None = None) -> str:
        """
        Serialise a dataset as canonical CSV: a header, the features with '.' as the
        decimal separator, and the class name of each row in the last column.

        Parameters:
            ds (Dataset): Dataset to write.
            path (str | Path | None): Written when given.

        Returns:
            str: The CSV text.
        """
        frame = pd.DataFrame(ds.features, columns=ds.feature_names)
        frame[ds.label_name] = [ds.class_names[label] for label in ds.labels]
        text = frame.to_csv(index=False, lineterminator="\n")
        if path is not None:
            Path(path).write_text(text)
        return text
