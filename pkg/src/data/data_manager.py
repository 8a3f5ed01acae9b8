import os
from typing import List, Union

import pandas as pd
from pydantic import BaseModel


class DataManager:

    def __init__(self, data_path: str):
        self.data_path = data_path

    def save_document(self, folder: str, file_name: str, document: BaseModel) -> str:
        file_path = f"{self.data_path}/{folder}/{file_name}.json"
        os.makedirs(os.path.dirname(file_path), exist_ok=True)

        with open(file_path, "w") as file:
            file.write(document.model_dump_json(indent=2))
        return file_path

    @staticmethod
    def create_dataframe(data: Union[List[BaseModel], BaseModel]) -> pd.DataFrame:
        if isinstance(data, BaseModel):
            data = [data]

        return pd.DataFrame([row.model_dump() for row in data])
