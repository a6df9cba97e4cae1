# Copyright 2011 VMware, Inc
# All Rights Reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""Metasolver base exception handling."""

from oslo_utils import excutils

from pareto_metasolver._i18n import _


class MetasolverException(Exception):
    """Base Metasolver Exception.

    To correctly use this class, inherit from it and define
    a 'message' property. That message will get printf'd
    with the keyword arguments provided to the constructor.
    """
    message = _("An unknown exception occurred.")

    def __init__(self, **kwargs):
        self.kwargs = kwargs
        try:
            super().__init__(self.message % kwargs)
            self.msg = self.message % kwargs
        except Exception:
            with excutils.save_and_reraise_exception() as ctxt:
                if not self.use_fatal_exceptions():
                    ctxt.reraise = False
                    # at least get the core message out if something
                    # happened
                    super().__init__(self.message)
                    self.msg = str(self.message)

    def __str__(self):
        return self.msg

    def use_fatal_exceptions(self):
        """Is the instance using fatal exceptions.

        :returns: Always returns False.
        """
        return False


class InvalidProblem(MetasolverException):
    message = _("Invalid problem: %(reason)s")


class DimensionMismatch(InvalidProblem):
    message = _("Dimension mismatch: %(reason)s")


class BadBounds(InvalidProblem):
    message = _("Variable %(name)s has lower bound %(lower)s greater than "
                "upper bound %(upper)s")


class BadIndex(InvalidProblem):
    message = _("Variable index %(index)s is out of range for a problem "
                "with %(count)s variables")


class InvalidCoefficient(InvalidProblem):
    message = _("Non-finite value %(value)s in %(where)s")


class AlreadyMin(InvalidProblem):
    message = _("Problem %(name)s already has a minimization sense")


class NotMinimization(InvalidProblem):
    message = _("Problem %(name)s must have a minimization sense here")


class InvalidSubproblem(MetasolverException):
    message = _("Invalid subproblem: %(reason)s")


class AllZeroWeights(InvalidSubproblem):
    message = _("Weight vector %(weights)s has no nonzero entry")


class InvalidConfig(MetasolverException):
    message = _("Invalid algorithm configuration: %(reason)s")


class UnsupportedDimension(MetasolverException):
    message = _("Algorithm %(algorithm)s does not support problems with "
                "%(objectives)s objectives")


class UnknownAlgorithm(MetasolverException):
    message = _("Unknown algorithm %(algorithm)s, valid algorithms are: "
                "%(valid)s")


class DuplicateIdentifier(MetasolverException):
    message = _("Algorithm %(algorithm)s is already registered")


class SubproblemFailed(MetasolverException):
    """A scalar subproblem ended in a status that stops the search."""
    message = _("Subproblem terminated with status %(status)s")

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self.status = kwargs.get('status')


class OracleError(MetasolverException):
    message = _("Oracle cannot enumerate the problem: %(reason)s")


class TooLarge(OracleError):
    message = _("Lattice of %(size)s points exceeds the enumeration limit "
                "of %(limit)s points")


class ContinuousUnsupported(OracleError):
    message = _("Variable %(name)s is continuous, enumeration needs "
                "bounded integer variables")


class InstanceError(MetasolverException):
    message = _("Invalid instance document: %(reason)s")


class ParseError(InstanceError):
    message = _("Instance document is not valid JSON: %(reason)s")


class SchemaError(InstanceError):
    message = _("Instance document does not match the schema: %(reason)s")


class ValidationError(InstanceError):
    message = _("Instance document describes an invalid problem: "
                "%(reason)s")
