from src.config import settings
from src.data.data_manager import DataManager
from src.data.entities import InputDocument
from src.data.generators import paper_examples
from src.utils.decorators import execution_timer
from src.utils.logger import get_logger

logger = get_logger("write_examples")


@execution_timer("Write Examples")
def main() -> None:
    manager = DataManager(data_path=settings.data_path)

    for name, matrix_set in paper_examples().items():
        path = manager.save_document("examples", name, InputDocument.from_matrix_set(matrix_set))
        logger.info(f"{name} -> {path}")


if __name__ == "__main__":
    main()
