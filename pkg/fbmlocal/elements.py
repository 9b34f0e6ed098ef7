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

from bisect import bisect
from . import state, validators

class ElementBase( type ):

    """
    Metaclass of the parameter sets. It names every Element declared in
    the class body after its attribute and keeps them in declaration
    order in _elements. Elements inherited from the base classes come
    first and may be overridden by redeclaring the attribute.
    """

    # type
    def __new__( cls, name, bases, attrs ):

        klass = super( ElementBase, cls ).__new__( cls, name, bases, attrs )

        declared = []
        for key, value in attrs.items():
            if not isinstance( value, Element ):
                continue

            value.setName( key )
            declared.insert( bisect( declared, value ), value )

        inherited = []
        for base in bases:
            for element in getattr( base, '_elements', [] ):
                if element.getName() not in attrs and element not in inherited:
                    inherited.append( element )

        klass._elements = inherited + declared
        return klass

class Element( object ):

    """
    Common part of parameters and parameter sets: name, label, one line
    help, a state.State and the validators.
    """

    # Validators every instance starts with
    _default_validators = []

    # Creation order of the elements
    _creation_counter = 0

    # void
    def __init__( self, name = None, label = None, help = None, required = False, \
                  error = None, validators = None ):

        """
        Common part of parameters and parameter sets.

        @param name: Name; class level elements get their attribute name
        @type name: str

        @param label: Label used in the messages (defaults to the name)
        @type label: str

        @param help: One line description shown by the command line help
        @type help: str

        @param required: Has to be set?
        @type required: bool

        @param error: Current error message
        @type error: str

        @param validators: Validators next to the default ones
        @type validators: list<validators.Validator>
        """

        self._creation_counter = Element._creation_counter
        Element._creation_counter += 1

        self._name = name
        self._label = label
        self._help = help
        self._state = state.State( required = required, error = error )

        # Constructor arguments, used by clone()
        self._init = dict( label = label, help = help, validators = validators )
        self.setValidators( validators )

    # bool
    def __lt__( self, other ):
        return self._creation_counter < other._creation_counter

    # void
    def setName( self, name ):
        self._name = name

    # void
    def setValidators( self, validator_list ):

        """
        Replaces the validators: the class defaults first, then the given
        ones. A single validator may be passed without a list.

        @param validator_list: Validators
        @type validator_list: list<validators.Validator>
        """

        def asList( value ):
            if value is None:
                return []

            return [ value ] if isinstance( value, validators.Validator ) else list( value )

        self._validators = asList( self._default_validators ) + asList( validator_list )

    # str
    def getName( self ):
        return self._name

    # str
    def getLabel( self ):
        return self._label or self._name

    # str
    def getHelp( self ):
        return self._help

    # state.State
    def getState( self ):
        return self._state

    # list<validators.Validator>
    def getValidators( self ):
        return self._validators

class ElementCollector( object, metaclass = ElementBase ):

    """
    Class level schema: the elements declared in the class body (and in
    its bases), see ElementBase.
    """

    # list<elements.Element>
    def getElements( self ):
        return self._elements

    # list<str>
    def getElementNames( self ):
        return [ e.getName() for e in self.getElements() ]
