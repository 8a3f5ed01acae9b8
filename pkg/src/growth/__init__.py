from .classification import (LambdaEnclosure, ComponentClassification, classification_depth,
                             component_lambda_bounds, classify)
from .order import GrowthOrder, GrowthVerification, growth_exponent, verify_growth

__all__ = ["LambdaEnclosure", "ComponentClassification", "classification_depth", "component_lambda_bounds",
           "classify", "GrowthOrder", "GrowthVerification", "growth_exponent", "verify_growth"]
