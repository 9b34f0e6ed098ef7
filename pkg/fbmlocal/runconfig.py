# -*- coding: utf-8 -*-

"""
fbmlocal is a numerical toolkit for local independence of fractional
Brownian motion.
Copyright (C) 2014, the fbmlocal developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, <see http://www.gnu.org/licenses/>.
"""

import logging
from . import exceptions

LOGGER = logging.getLogger( __name__ )

# dict
def mergeSources( *sources ):

    """
    Merge value dictionaries; later sources override earlier ones. The
    usual order is the config file, then the command line. Defaults are
    not merged here: they live in the parameters themselves.

    @param sources: Value dictionaries (None is skipped)
    @type sources: list<dict>

    @return: Merged dictionary
    @rtype: dict
    """

    merged = {}
    for source in sources:
        merged.update({ k: v for k, v in ( source or {} ).items() if v is not None })

    return merged

class RunConfig( object ):

    """
    Validated parameters of one run. It clones the command's parameter
    set (the class level schema is never modified), sets the merged values
    and checks every precondition before anything is computed. A value
    without a parameter of that name is a ValidationError.
    """

    # void
    def __init__( self, parameter_set, value = None ):

        """
        Validated parameters of one run.

        @param parameter_set: Schema of the command
        @type parameter_set: paramsets.ParameterSet

        @param value: Raw values (name -> value)
        @type value: dict
        """

        self._parameter_set = parameter_set.clone()

        names = set( self._parameter_set.getElementNames() )
        unknown = sorted( set( value or {} ) - names )
        if unknown:
            raise exceptions.ValidationError( '{} does not accept {}'.format(
                self.getCommand(), ', '.join( unknown ) ) )

        self._parameter_set.setValue( value )
        self.valid = None

    # params.Parameter
    def __getattr__( self, attr ):

        """
        RunConfig is working like a ParameterSet, so you can use .attr to
        returns a Parameter.
        """

        if attr.startswith( '_' ):
            raise AttributeError( attr )

        return getattr( self.getParameterSet(), attr )

    # paramsets.ParameterSet
    def getParameterSet( self ):
        return self._parameter_set

    # str
    def getCommand( self ):
        return self._parameter_set.getName()

    # tuple<bool,list>
    def isValid( self, return_list = False ):

        """
        Checks the validity of the run's parameters.

        @param return_list: Returns list of error
        @type return_list: bool

        @return: Validity of the run
        @rtype: bool (or tuple<bool,list<tuple<str,str>>>)
        """

        valid, errors = self.getParameterSet().isValid()
        self.valid = valid

        if return_list:
            return valid, errors

        return valid

    # void
    def validate( self ):

        """
        Raises ValidationCollectionError with every violated precondition.
        """

        valid, errors = self.isValid( return_list = True )
        if not valid:
            raise exceptions.ValidationCollectionError( errors )

    # dict
    def getValue( self ):
        return self.getParameterSet().getValue()

    # type
    def get( self, name ):
        return self.getParameterSet().getParameter( name ).getValue()

    # list<tuple<str,str>>
    def getData( self ):

        """
        Returns the full parameter set as formatted (name, value) pairs in
        declaration order, for file headers.

        @rtype: list<tuple<str,str>>
        """

        return [ ( p.getName(), p.format( p.getValue() ) ) \
            for p in self.getParameterSet().getElements() ]

    value = property( getValue )
