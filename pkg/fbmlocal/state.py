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

class State( object ):

    """
    State object of a parameter or of a computed result. A parameter uses
    the required and error attributes, a result (spectrum, scan row,
    report) carries the numerical quality flags.
    """

    # void
    def __init__( self, required = False, error = None, ill_conditioned = False, \
                  truncated = False, skipped = False, truncation_dominated = False, \
                  message = None ):

        """
        State object of a parameter or of a computed result.

        @param required: Require to set the parameter?
        @type required: bool

        @param error: Current validation error message
        @type error: str

        @param ill_conditioned: Whitening factor condition above the limit
        @type ill_conditioned: bool

        @param truncated: Rank truncation happened during whitening
        @type truncated: bool

        @param skipped: The row was aborted
        @type skipped: bool

        @param truncation_dominated: Doubling the truncation moved the result
        @type truncation_dominated: bool

        @param message: Free text diagnostic
        @type message: str
        """

        self.setRequired( required )
        self.setError( error )
        self.setIllConditioned( ill_conditioned )
        self.setTruncated( truncated )
        self.setSkipped( skipped )
        self.setTruncationDominated( truncation_dominated )
        self.setMessage( message )

    # dict
    def getState( self ):

        """
        Returns the current state.

        @return: Current state
        @rtype: dict
        """

        return {
            'required': self.isRequired(),
            'error': self.getError(),
            'ill_conditioned': self.isIllConditioned(),
            'truncated': self.isTruncated(),
            'skipped': self.isSkipped(),
            'truncation_dominated': self.isTruncationDominated(),
            'message': self.getMessage()
        }

    # void
    def setRequired( self, required = True ):
        self.required = required

    # void
    def setError( self, error ):

        """
        Set the validation error message of the parameter.

        @param error: Current error message
        @type error: str
        """

        self.error = error

    # void
    def setIllConditioned( self, ill_conditioned = True ):
        self.ill_conditioned = ill_conditioned

    # void
    def setTruncated( self, truncated = True ):
        self.truncated = truncated

    # void
    def setSkipped( self, skipped = True ):
        self.skipped = skipped

    # void
    def setTruncationDominated( self, truncation_dominated = True ):
        self.truncation_dominated = truncation_dominated

    # void
    def setMessage( self, message ):

        """
        Set the diagnostic message. A second message is appended to the
        first one.

        @param message: Diagnostic message
        @type message: str
        """

        if message is not None and getattr( self, 'message', None ):
            message = '{}; {}'.format( self.message, message )

        self.message = message

    # bool
    def isRequired( self ):
        return self.required

    # bool
    def isError( self ):
        return self.error is not None

    # bool
    def isIllConditioned( self ):
        return self.ill_conditioned

    # bool
    def isTruncated( self ):
        return self.truncated

    # bool
    def isSkipped( self ):
        return self.skipped

    # bool
    def isTruncationDominated( self ):
        return self.truncation_dominated

    # bool
    def isFlagged( self ):

        """
        Is any quality flag raised? Rank truncation alone is not a quality
        failure, fine grids truncate routinely.

        @return: Is any quality flag raised?
        @rtype: bool
        """

        return self.isIllConditioned() \
            or self.isSkipped() \
            or self.isTruncationDominated()

    # str
    def getError( self ):
        return self.error

    # str
    def getMessage( self ):
        return self.message

    # void
    def update( self, other ):

        """
        Raise every flag that is raised in the other state. Used to fold
        the states of rows into the state of a report.

        @param other: Another state
        @type other: state.State
        """

        self.setIllConditioned( self.isIllConditioned() or other.isIllConditioned() )
        self.setTruncated( self.isTruncated() or other.isTruncated() )
        self.setSkipped( self.isSkipped() or other.isSkipped() )
        self.setTruncationDominated( 
            self.isTruncationDominated() or other.isTruncationDominated() 
        )
        if other.getMessage() is not None:
            self.setMessage( other.getMessage() )
