import os
from pydantic import BaseModel, Field, field_validator
from dotenv import load_dotenv

load_dotenv()


class AppConfig(BaseModel):

    log_level: str = Field(
        default="INFO",
        description="Logging level (DEBUG, INFO, WARNING, ERROR)"
    )

    workers: int = Field(
        default=1,
        description="Default number of sweep worker processes (1 = serial)"
    )

    lindblad_cap: int = Field(
        default=64,
        description="Largest bath mode count accepted by the density-matrix propagator"
    )

    output_dir: str = Field(
        default=".",
        description="Directory that relative output paths are resolved against"
    )

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v):
        valid_levels = {'DEBUG', 'INFO', 'WARNING', 'ERROR'}
        if v.upper() not in valid_levels:
            raise ValueError(f'Log level must be one of {valid_levels}')
        return v.upper()

    @field_validator('workers', 'lindblad_cap')
    @classmethod
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError('Must be a positive integer')
        return v


def get_config() -> AppConfig:

    try:
        return AppConfig(
            log_level=os.getenv('STIRAP_LOG_LEVEL', 'INFO'),
            workers=int(os.getenv('STIRAP_WORKERS', '1')),
            lindblad_cap=int(os.getenv('STIRAP_LINDBLAD_CAP', '64')),
            output_dir=os.getenv('STIRAP_OUTPUT_DIR', '.'),
        )
    except Exception as e:
        print(f"Configuration error: {e}")
        print('Please check your .env file is properly set up')
        raise


config = get_config()
